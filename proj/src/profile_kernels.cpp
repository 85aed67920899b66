#include "codescout/profile_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>

#include "codescout/error.hpp"

namespace codescout::kernels {

namespace {

void check_direct_limits(const LinearCode& code, int threads) {
    if (code.n() > kMaxDirectLength)
        throw LimitExceeded("direct coset enumeration needs 2^" + std::to_string(code.n()) +
                            " words; limit is n <= " + std::to_string(kMaxDirectLength) +
                            " (use the dual transform instead)");
    const std::uint64_t table_bytes = code.coset_count() * (code.n() + 1) * sizeof(std::uint32_t);
    if (table_bytes * static_cast<std::uint64_t>(threads) > kScratchBudget)
        throw LimitExceeded("direct coset enumeration: per-syndrome tables for 2^" +
                            std::to_string(code.redundancy()) + " cosets exceed the memory budget");
}

void check_dual_limits(const LinearCode& code) {
    if (code.redundancy() > kMaxDualRedundancy)
        throw LimitExceeded("dual transform iterates 2^(n-k) = 2^" + std::to_string(code.redundancy()) +
                            " cosets; limit is n-k <= " + std::to_string(kMaxDualRedundancy));
    if (code.n() > 255) throw LimitExceeded("dual transform supports n <= 255");
}

}  // namespace

CosetWeightCounts coset_weight_counts_serial(const LinearCode& code) {
    check_direct_limits(code, 1);
    const std::size_t n = code.n();
    CosetWeightCounts out{n, code.redundancy(), std::vector<std::uint64_t>(code.coset_count() * (n + 1), 0)};
    const auto h_rows = code.packed_parity_check();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t word = 0; word < total; ++word) {
        const auto s = packed_syndrome(h_rows, word);
        ++out.counts[s * (n + 1) + static_cast<std::size_t>(std::popcount(word))];
    }
    return out;
}

CosetWeightCounts coset_weight_counts_parallel(const LinearCode& code) {
    const int threads = omp_get_max_threads();
    check_direct_limits(code, threads);
    const std::size_t n = code.n();
    const std::size_t stride = n + 1;
    const std::uint64_t cells = code.coset_count() * stride;
    CosetWeightCounts out{n, code.redundancy(), std::vector<std::uint64_t>(cells, 0)};
    const auto cols = code.syndrome_columns();

    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t chunk_count =
        std::bit_floor(std::min<std::uint64_t>(total, std::uint64_t{64} * static_cast<std::uint64_t>(threads)));
    const std::uint64_t chunk = total / chunk_count;

#pragma omp parallel num_threads(threads)
    {
        // Per-thread bucket counts stay below 2^k <= 2^31 per cell.
        std::vector<std::uint32_t> local(cells, 0);
#pragma omp for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk_count); ++c) {
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
            const std::uint64_t end = begin + chunk;
            // Gray-code walk: word(i) = i ^ (i >> 1) differs from word(i-1) in bit ctz(i).
            std::uint64_t word = begin ^ (begin >> 1);
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if ((word >> j) & 1U) s ^= cols[j];
            std::size_t w = static_cast<std::size_t>(std::popcount(word));
            ++local[s * stride + w];
            for (std::uint64_t i = begin + 1; i < end; ++i) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(i));
                const std::uint64_t mask = std::uint64_t{1} << bit;
                word ^= mask;
                s ^= cols[bit];
                w = (word & mask) ? w + 1 : w - 1;
                ++local[s * stride + w];
            }
        }
#pragma omp critical(codescout_merge_counts)
        for (std::uint64_t i = 0; i < cells; ++i) out.counts[i] += local[i];
    }
    return out;
}

std::vector<std::uint8_t> dual_codeword_weights(const LinearCode& code) {
    check_dual_limits(code);
    const std::uint64_t total = code.coset_count();
    std::vector<std::uint8_t> weights(total, 0);
    const auto& h = code.parity_check();
    const std::size_t r = code.redundancy();
    const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 256);
    const std::uint64_t chunk = total / chunk_count;

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk_count); ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t end = begin + chunk;
        std::uint64_t x = begin ^ (begin >> 1);
        BitWord u(code.n());
        for (std::size_t i = 0; i < r; ++i)
            if ((x >> i) & 1U) u ^= h.row(i);
        weights[x] = static_cast<std::uint8_t>(u.weight());
        for (std::uint64_t i = begin + 1; i < end; ++i) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(i));
            x ^= std::uint64_t{1} << bit;
            u ^= h.row(bit);
            weights[x] = static_cast<std::uint8_t>(u.weight());
        }
    }
    return weights;
}

void walsh_hadamard(std::vector<std::int32_t>& data) {
    const std::size_t size = data.size();
    if (!std::has_single_bit(size)) throw InvalidArgument("walsh_hadamard: size must be a power of two");
    for (std::size_t len = 1; len < size; len <<= 1) {
        const auto blocks = static_cast<std::int64_t>(size / (2 * len));
#pragma omp parallel for schedule(static) if (size >= (std::size_t{1} << 14))
        for (std::int64_t b = 0; b < blocks; ++b) {
            const std::size_t base = static_cast<std::size_t>(b) * 2 * len;
            for (std::size_t j = base; j < base + len; ++j) {
                const std::int32_t a = data[j];
                const std::int32_t c = data[j + len];
                data[j] = a + c;
                data[j + len] = a - c;
            }
        }
    }
}

namespace {

std::vector<std::size_t> present_weights(const std::vector<std::uint8_t>& dual_weights, std::size_t n) {
    std::vector<bool> seen(n + 1, false);
    for (auto w : dual_weights) seen[w] = true;
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= n; ++d)
        if (seen[d]) out.push_back(d);
    return out;
}

}  // namespace

DualSignatures dual_signatures_serial(const LinearCode& code) {
    check_dual_limits(code);
    const std::size_t r = code.redundancy();
    const std::uint64_t total = code.coset_count();
    // Independent of the Gray walk: build each dual codeword from scratch.
    std::vector<std::uint8_t> dual_weights(total);
    for (std::uint64_t x = 0; x < total; ++x) {
        BitWord u(code.n());
        for (std::size_t i = 0; i < r; ++i)
            if ((x >> i) & 1U) u ^= code.parity_check().row(i);
        dual_weights[x] = static_cast<std::uint8_t>(u.weight());
    }
    DualSignatures out{code.n(), r, present_weights(dual_weights, code.n()), {}};
    std::vector<std::size_t> slot(code.n() + 1, 0);
    for (std::size_t i = 0; i < out.weights.size(); ++i) slot[out.weights[i]] = i;
    const std::size_t width = out.weights.size();
    out.sums.assign(total * width, 0);
    for (std::uint64_t s = 0; s < total; ++s)
        for (std::uint64_t x = 0; x < total; ++x)
            out.sums[s * width + slot[dual_weights[x]]] += (std::popcount(x & s) & 1) ? -1 : 1;
    return out;
}

DualSignatures dual_signatures_parallel(const LinearCode& code) {
    const auto dual_weights = dual_codeword_weights(code);
    const std::uint64_t total = code.coset_count();
    DualSignatures out{code.n(), code.redundancy(), present_weights(dual_weights, code.n()), {}};
    const std::size_t width = out.weights.size();
    if (total * width * sizeof(std::int32_t) * 2 > kScratchBudget)
        throw LimitExceeded("dual transform: " + std::to_string(width) + " weight classes over 2^" +
                            std::to_string(code.redundancy()) + " cosets exceed the memory budget");
    out.sums.assign(total * width, 0);
    std::vector<std::int32_t> indicator(total);
    for (std::size_t i = 0; i < width; ++i) {
        const auto d = out.weights[i];
#pragma omp parallel for schedule(static)
        for (std::int64_t x = 0; x < static_cast<std::int64_t>(total); ++x)
            indicator[static_cast<std::size_t>(x)] = dual_weights[static_cast<std::size_t>(x)] == d ? 1 : 0;
        walsh_hadamard(indicator);
#pragma omp parallel for schedule(static)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(total); ++s)
            out.sums[static_cast<std::size_t>(s) * width + i] = indicator[static_cast<std::size_t>(s)];
    }
    return out;
}

}  // namespace codescout::kernels
