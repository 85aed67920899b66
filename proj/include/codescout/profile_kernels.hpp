#pragma once

// Enumeration kernels behind the coset-weight profile. Each kernel comes as an
// OpenMP-parallel version and a plain serial reference; both must return identical
// results and the tests hold them to that.

#include <cstdint>
#include <vector>

#include "codescout/linear_code.hpp"

namespace codescout::kernels {

inline constexpr std::size_t kMaxDirectLength = 32;
inline constexpr std::size_t kMaxDualRedundancy = 26;
// Scratch budget for per-thread tables, in bytes.
inline constexpr std::uint64_t kScratchBudget = std::uint64_t{3} << 30;

// counts[s * (n+1) + w] = number of weight-w words with syndrome s, over all 2^n words.
struct CosetWeightCounts {
    std::size_t n = 0;
    std::size_t redundancy = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t at(std::uint64_t syndrome, std::size_t weight) const {
        return counts[syndrome * (n + 1) + weight];
    }
};

CosetWeightCounts coset_weight_counts_serial(const LinearCode& code);
CosetWeightCounts coset_weight_counts_parallel(const LinearCode& code);

// Signed dual-weight character sums: for each syndrome s and each weight d occurring in
// the dual code, N_s(d) = sum over dual codewords u of weight d of (-1)^<e,u>, where e is
// any word with syndrome s. With u = x*H the sign is (-1)^popcount(x & s).
struct DualSignatures {
    std::size_t n = 0;
    std::size_t redundancy = 0;
    std::vector<std::size_t> weights;   // dual weights present, ascending
    std::vector<std::int32_t> sums;     // sums[s * weights.size() + i]

    std::int32_t at(std::uint64_t syndrome, std::size_t weight_index) const {
        return sums[syndrome * weights.size() + weight_index];
    }
};

// Reference: direct O(4^(n-k)) character sums.
DualSignatures dual_signatures_serial(const LinearCode& code);
// Walsh-Hadamard transform of each dual weight class, O((n-k) 2^(n-k)) per class.
DualSignatures dual_signatures_parallel(const LinearCode& code);

// Weight of every dual codeword x*H, indexed by x in [0, 2^(n-k)).
std::vector<std::uint8_t> dual_codeword_weights(const LinearCode& code);

// In-place unnormalised Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::vector<std::int32_t>& data);

}  // namespace codescout::kernels
