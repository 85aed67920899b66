#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codescout/linear_code.hpp"

namespace codescout {

inline constexpr std::size_t kMaxTableRedundancy = 32;

// Coset leader weight per syndrome. Because every member of a coset is at distance
// w(leader) from its nearest codeword, this is all the GLRT statistic needs.
class SyndromeTable {
public:
    std::size_t n() const noexcept { return n_; }
    std::size_t redundancy() const noexcept { return redundancy_; }
    std::size_t size() const noexcept { return leader_weight_.size(); }

    std::uint8_t leader_weight(std::uint64_t syndrome) const { return leader_weight_.at(syndrome); }
    std::span<const std::uint8_t> leader_weights() const noexcept { return leader_weight_; }

    // Distance from `word` to the nearest codeword.
    std::size_t distance(const BitWord& word) const;
    // Same for an n <= 64 word packed in an integer.
    std::size_t distance_packed(std::uint64_t word) const noexcept {
        std::uint64_t s = 0;
        for (std::size_t j = 0; word != 0; ++j, word >>= 1)
            if (word & 1U) s ^= columns_[j];
        return leader_weight_[s];
    }
    std::uint64_t syndrome_packed(std::uint64_t word) const noexcept {
        std::uint64_t s = 0;
        for (std::size_t j = 0; word != 0; ++j, word >>= 1)
            if (word & 1U) s ^= columns_[j];
        return s;
    }

    // Leader weight for coset of syndrome s (no bounds check).
    std::size_t operator[](std::uint64_t s) const noexcept { return leader_weight_[s]; }

private:
    friend SyndromeTable build_syndrome_table(const LinearCode& code);

    std::size_t n_ = 0;
    std::size_t redundancy_ = 0;
    std::vector<std::uint64_t> columns_;
    std::vector<std::uint8_t> leader_weight_;
};

// Breadth-first over error weights 0,1,2,... until all 2^(n-k) syndromes are seen.
// Requires n-k <= 32.
SyndromeTable build_syndrome_table(const LinearCode& code);

}  // namespace codescout
