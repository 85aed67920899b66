#include "codescout/gf2_matrix.hpp"

#include <utility>

#include "codescout/error.hpp"

namespace codescout {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitWord(cols)) {}

GF2Matrix::GF2Matrix(std::vector<BitWord> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) return;
    cols_ = rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw InvalidArgument("GF2Matrix: ragged rows");
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (rows_[r].get(c)) t.rows_[c].set(r, true);
    return t;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
    if (cols_ != rhs.rows())
        throw InvalidArgument("GF2Matrix: incompatible shapes for product");
    GF2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = rhs.left_multiply(rows_[r]);
    return out;
}

BitWord GF2Matrix::left_multiply(const BitWord& v) const {
    if (v.size() != rows())
        throw InvalidArgument("GF2Matrix: vector length " + std::to_string(v.size()) +
                              " does not match " + std::to_string(rows()) + " rows");
    BitWord out(cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        if (v.get(r)) out ^= rows_[r];
    return out;
}

bool GF2Matrix::is_zero() const noexcept {
    for (const auto& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

GF2Matrix::Echelon GF2Matrix::reduced_echelon() const {
    std::vector<BitWord> work = rows_;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < work.size(); ++c) {
        std::size_t sel = lead;
        while (sel < work.size() && !work[sel].get(c)) ++sel;
        if (sel == work.size()) continue;
        std::swap(work[lead], work[sel]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != lead && work[r].get(c)) work[r] ^= work[lead];
        pivots.push_back(c);
        ++lead;
    }
    work.resize(lead);
    Echelon e;
    e.reduced = GF2Matrix(cols_ == 0 ? 0 : lead, cols_);
    e.reduced.rows_ = std::move(work);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t GF2Matrix::rank() const { return reduced_echelon().pivots.size(); }

GF2Matrix GF2Matrix::nullspace() const {
    const auto ech = reduced_echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<BitWord> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        BitWord h(cols_);
        h.set(f, true);
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            if (ech.reduced.row(i).get(f)) h.set(ech.pivots[i], true);
        basis.push_back(std::move(h));
    }
    GF2Matrix out(0, cols_);
    out.rows_ = std::move(basis);
    return out;
}

}  // namespace codescout
