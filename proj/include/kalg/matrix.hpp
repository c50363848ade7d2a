#pragma once

#include "kalg/gaussian.hpp"

#include <cstddef>
#include <vector>

namespace kalg {

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const;

    /// Appends the rows of `o` below this matrix (column counts must agree).
    Matrix vstack(const Matrix& o) const;

    Matrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Exact reduced row-echelon form. Pivot choice is deterministic: the first
/// row with a nonzero entry in column order, so reduced forms are
/// reproducible bit-for-bit.
RrefResult rref(const Matrix& m);

struct SolveResult {
    bool consistent = false;
    /// A particular solution with all free variables set to zero
    /// (cols(rhs) solution columns). Only meaningful when consistent.
    Matrix particular;
    /// Null-space basis of the coefficient matrix, one column per free
    /// variable; parametrizes the full solution set.
    Matrix kernel;
    /// When inconsistent: the row of rref([A|rhs]) reading 0 = nonzero.
    std::size_t witness_row = 0;
};

/// Solves m * x = rhs exactly. Throws std::invalid_argument on a row-count
/// mismatch; an inconsistent system is reported through the result, not an
/// exception.
SolveResult solve(const Matrix& m, const Matrix& rhs);

/// Null-space basis as columns.
Matrix kernel_basis(const Matrix& m);

/// Exact determinant via Gaussian elimination. Throws std::domain_error on
/// non-square input.
GaussianRational det(const Matrix& m);

}  // namespace kalg
