#include "codescout/syndrome_table.hpp"

#include "codescout/error.hpp"

namespace codescout {

namespace {

// Visits every weight-w subset of columns once, handing the XOR of the chosen columns
// to `visit`; stops as soon as visit returns false.
template <class Visit>
bool for_each_subset_syndrome(std::span<const std::uint64_t> cols, std::size_t w, Visit&& visit) {
    const std::size_t n = cols.size();
    if (w == 0) return visit(std::uint64_t{0});
    if (w > n) return true;
    std::vector<std::size_t> idx(w);
    std::vector<std::uint64_t> prefix(w + 1, 0);
    for (std::size_t i = 0; i < w; ++i) {
        idx[i] = i;
        prefix[i + 1] = prefix[i] ^ cols[i];
    }
    while (true) {
        if (!visit(prefix[w])) return false;
        // Advance to the next combination in lexicographic order.
        std::size_t pos = w;
        while (pos > 0 && idx[pos - 1] == n - w + pos - 1) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        prefix[pos] = prefix[pos - 1] ^ cols[idx[pos - 1]];
        for (std::size_t i = pos; i < w; ++i) {
            idx[i] = idx[i - 1] + 1;
            prefix[i + 1] = prefix[i] ^ cols[idx[i]];
        }
    }
}

}  // namespace

std::size_t SyndromeTable::distance(const BitWord& word) const {
    if (word.size() != n_) throw InvalidArgument("SyndromeTable: word length does not match code");
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j)
        if (word.get(j)) s ^= columns_[j];
    return leader_weight_[s];
}

SyndromeTable build_syndrome_table(const LinearCode& code) {
    if (code.redundancy() > kMaxTableRedundancy)
        throw LimitExceeded("build_syndrome_table: n-k = " + std::to_string(code.redundancy()) +
                            " exceeds the table limit of " + std::to_string(kMaxTableRedundancy));
    constexpr std::uint8_t kUnset = 0xFF;
    SyndromeTable table;
    table.n_ = code.n();
    table.redundancy_ = code.redundancy();
    table.columns_.assign(code.syndrome_columns().begin(), code.syndrome_columns().end());
    table.leader_weight_.assign(code.coset_count(), kUnset);

    std::uint64_t remaining = code.coset_count();
    for (std::size_t w = 0; w <= code.n() && remaining > 0; ++w) {
        const auto weight = static_cast<std::uint8_t>(w);
        for_each_subset_syndrome(table.columns_, w, [&](std::uint64_t s) {
            if (table.leader_weight_[s] == kUnset) {
                table.leader_weight_[s] = weight;
                --remaining;
            }
            return remaining > 0;
        });
    }
    if (remaining != 0) throw InvariantViolation("build_syndrome_table: unreachable syndromes");
    return table;
}

}  // namespace codescout
