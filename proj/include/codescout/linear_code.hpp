#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codescout/bitword.hpp"
#include "codescout/gf2_matrix.hpp"

namespace codescout {

// Largest supported redundancy n-k; syndromes are carried in one 64-bit word.
inline constexpr std::size_t kMaxRedundancy = 63;

// An (n,k) binary linear block code with a consistent generator / parity-check pair.
// Construction asserts rank(G)=k, rank(H)=n-k and G*H^T = 0; the object is immutable.
class LinearCode {
public:
    LinearCode(GF2Matrix generator, GF2Matrix parity_check, std::string label);

    // Parity check is derived as the nullspace of the generator, so the returned pair
    // describes exactly the row space of `rows` (no coordinate permutation leaks out).
    static LinearCode from_generator(const GF2Matrix& rows, std::string label);
    static LinearCode from_parity_check(const GF2Matrix& parity_check, std::string label);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t redundancy() const noexcept { return n_ - k_; }
    std::uint64_t coset_count() const noexcept { return std::uint64_t{1} << redundancy(); }
    const std::string& label() const noexcept { return label_; }

    const GF2Matrix& generator() const noexcept { return generator_; }
    const GF2Matrix& parity_check() const noexcept { return parity_check_; }

    BitWord encode(const BitWord& message) const;

    // H * word^T packed as an integer: bit i is the parity of row i of H.
    std::uint64_t syndrome(const BitWord& word) const;

    // Column j of H packed the same way as syndrome(); syndrome(e_j) == columns[j].
    std::span<const std::uint64_t> syndrome_columns() const noexcept { return h_columns_; }

    // Generator and parity-check rows packed into one word each (only when n <= 64).
    bool fits_word() const noexcept { return n_ <= 64; }
    std::span<const std::uint64_t> packed_generator() const noexcept { return g_packed_; }
    std::span<const std::uint64_t> packed_parity_check() const noexcept { return h_packed_; }

    // Same code with coordinates reordered: new coordinate j is old coordinate perm[j].
    LinearCode permuted(std::span<const std::size_t> perm) const;

    // Codeword weight distribution A_0..A_n by enumerating all 2^k codewords (k <= 30).
    std::vector<std::uint64_t> weight_distribution() const;
    std::size_t minimum_distance() const;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    GF2Matrix generator_;
    GF2Matrix parity_check_;
    std::string label_;
    std::vector<std::uint64_t> h_columns_;
    std::vector<std::uint64_t> g_packed_;
    std::vector<std::uint64_t> h_packed_;
};

// Syndrome of a word given as 64-bit packed integer (n <= 64).
inline std::uint64_t packed_syndrome(std::span<const std::uint64_t> h_rows, std::uint64_t word) noexcept {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < h_rows.size(); ++i)
        s |= static_cast<std::uint64_t>(__builtin_parityll(h_rows[i] & word)) << i;
    return s;
}

}  // namespace codescout
