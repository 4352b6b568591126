#pragma once

#include <vector>

#include "weyl/param_rat.hpp"

namespace weyl {

/// Dense matrix over the fraction field, row-major.
class Matrix {
public:
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ParamRat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const ParamRat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    std::vector<ParamRat> a_;
};

/// In-place reduced row echelon form with deterministic pivoting: for each
/// column in ascending order, the first remaining row (by row order) with a
/// nonzero entry becomes the pivot. Returns the pivot columns, ascending.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

/// Kernel basis, one vector per free column in ascending column order.
/// Each vector is scaled so its first nonzero coordinate is 1.
std::vector<std::vector<ParamRat>> nullspace(Matrix m);

} // namespace weyl
