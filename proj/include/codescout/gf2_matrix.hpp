#pragma once

#include <cstddef>
#include <vector>

#include "codescout/bitword.hpp"

namespace codescout {

// Dense binary matrix, each row a packed BitWord.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);
    explicit GF2Matrix(std::vector<BitWord> rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }

    const BitWord& row(std::size_t r) const { return rows_.at(r); }
    BitWord& row(std::size_t r) { return rows_.at(r); }
    const std::vector<BitWord>& row_words() const noexcept { return rows_; }

    GF2Matrix transpose() const;
    GF2Matrix operator*(const GF2Matrix& rhs) const;

    // Row vector times matrix: v (length rows()) -> length cols().
    BitWord left_multiply(const BitWord& v) const;

    bool is_zero() const noexcept;
    std::size_t rank() const;

    struct Echelon;
    Echelon reduced_echelon() const;

    // Rows span {x : this * x^T = 0}.
    GF2Matrix nullspace() const;

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitWord> rows_;
};

struct GF2Matrix::Echelon {
    GF2Matrix reduced;                 // nonzero rows only, in pivot order
    std::vector<std::size_t> pivots;   // pivot column of each row
};

}  // namespace codescout
