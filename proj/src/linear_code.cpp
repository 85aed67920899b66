#include "codescout/linear_code.hpp"

#include <bit>
#include <utility>

#include "codescout/error.hpp"

namespace codescout {

LinearCode::LinearCode(GF2Matrix generator, GF2Matrix parity_check, std::string label)
    : n_(generator.cols()),
      k_(generator.rows()),
      generator_(std::move(generator)),
      parity_check_(std::move(parity_check)),
      label_(std::move(label)) {
    if (k_ < 1 || k_ >= n_)
        throw InvalidArgument("LinearCode: need 1 <= k < n (got n=" + std::to_string(n_) +
                              ", k=" + std::to_string(k_) + ")");
    if (parity_check_.cols() != n_ || parity_check_.rows() != n_ - k_)
        throw InvalidArgument("LinearCode: parity-check shape does not match generator");
    if (redundancy() > kMaxRedundancy)
        throw LimitExceeded("LinearCode: n-k = " + std::to_string(redundancy()) +
                            " exceeds supported redundancy " + std::to_string(kMaxRedundancy));
    if (generator_.rank() != k_) throw InvariantViolation("LinearCode: generator is rank deficient");
    if (parity_check_.rank() != n_ - k_)
        throw InvariantViolation("LinearCode: parity check is rank deficient");
    if (!(generator_ * parity_check_.transpose()).is_zero())
        throw InvariantViolation("LinearCode: G * H^T != 0");

    h_columns_.assign(n_, 0);
    for (std::size_t i = 0; i < redundancy(); ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (parity_check_.get(i, j)) h_columns_[j] |= std::uint64_t{1} << i;

    if (fits_word()) {
        for (const auto& r : generator_.row_words()) g_packed_.push_back(r.low_bits());
        for (const auto& r : parity_check_.row_words()) h_packed_.push_back(r.low_bits());
    }
}

LinearCode LinearCode::from_generator(const GF2Matrix& rows, std::string label) {
    if (rows.rows() == 0 || rows.rows() >= rows.cols())
        throw InvalidArgument("from_generator: need 1 <= k < n");
    if (rows.rank() != rows.rows())
        throw InvalidArgument("from_generator: generator rows are linearly dependent");
    return LinearCode(rows, rows.nullspace(), std::move(label));
}

LinearCode LinearCode::from_parity_check(const GF2Matrix& parity_check, std::string label) {
    if (parity_check.rank() != parity_check.rows())
        throw InvalidArgument("from_parity_check: parity-check rows are linearly dependent");
    return LinearCode(parity_check.nullspace(), parity_check, std::move(label));
}

BitWord LinearCode::encode(const BitWord& message) const {
    if (message.size() != k_)
        throw InvalidArgument("encode: message length " + std::to_string(message.size()) +
                              " != k = " + std::to_string(k_));
    return generator_.left_multiply(message);
}

std::uint64_t LinearCode::syndrome(const BitWord& word) const {
    if (word.size() != n_)
        throw InvalidArgument("syndrome: word length " + std::to_string(word.size()) +
                              " != n = " + std::to_string(n_));
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < redundancy(); ++i)
        if (parity_check_.row(i).dot(word)) s |= std::uint64_t{1} << i;
    return s;
}

LinearCode LinearCode::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw InvalidArgument("permuted: permutation has wrong length");
    std::vector<bool> seen(n_, false);
    for (auto p : perm) {
        if (p >= n_ || seen[p]) throw InvalidArgument("permuted: not a permutation");
        seen[p] = true;
    }
    auto apply = [&](const GF2Matrix& m) {
        GF2Matrix out(m.rows(), n_);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t j = 0; j < n_; ++j)
                if (m.get(r, perm[j])) out.set(r, j, true);
        return out;
    };
    return LinearCode(apply(generator_), apply(parity_check_), label_);
}

std::vector<std::uint64_t> LinearCode::weight_distribution() const {
    if (k_ > 30) throw LimitExceeded("weight_distribution: k > 30 is too large to enumerate");
    std::vector<std::uint64_t> dist(n_ + 1, 0);
    BitWord c(n_);
    dist[0] = 1;
    // Gray-code walk over messages: step i flips generator row ctz(i).
    const std::uint64_t total = std::uint64_t{1} << k_;
    for (std::uint64_t i = 1; i < total; ++i) {
        c ^= generator_.row(static_cast<std::size_t>(std::countr_zero(i)));
        ++dist[c.weight()];
    }
    return dist;
}

std::size_t LinearCode::minimum_distance() const {
    const auto dist = weight_distribution();
    for (std::size_t w = 1; w <= n_; ++w)
        if (dist[w] != 0) return w;
    return 0;
}

}  // namespace codescout
