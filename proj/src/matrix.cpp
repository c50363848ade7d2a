#include "kalg/matrix.hpp"

#include <stdexcept>

namespace kalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("Matrix: inner dimensions do not match");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (rows_ == 0)
        return o;
    if (o.rows_ == 0)
        return *this;
    if (cols_ != o.cols_)
        throw std::invalid_argument("Matrix: column counts do not match");
    Matrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(rows_ + i, j) = o(i, j);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

RrefResult rref(const Matrix& m) {
    RrefResult out;
    out.reduced = m;
    Matrix& a = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        // First nonzero entry in column order.
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col).is_zero())
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(sel, j), a(pivot_row, j));
        GaussianRational inv = GaussianRational(1) / a(pivot_row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            a(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col).is_zero())
                continue;
            GaussianRational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= f * a(pivot_row, j);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivots.size();
    return out;
}

SolveResult solve(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows())
        throw std::invalid_argument("solve: rhs row count does not match matrix");
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + rhs.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            aug(i, n + j) = rhs(i, j);
    }
    RrefResult r = rref(aug);

    SolveResult out;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        if (r.pivots[k] >= n) {
            out.consistent = false;
            out.witness_row = k;
            out.kernel = kernel_basis(m);
            return out;
        }
    }
    out.consistent = true;
    out.particular = Matrix(n, rhs.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            out.particular(r.pivots[k], j) = r.reduced(k, n + j);
    out.kernel = kernel_basis(m);
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    std::size_t nullity = n - r.rank;
    Matrix k(n, nullity);
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        k(f, col) = GaussianRational(1);
        for (std::size_t p = 0; p < r.pivots.size(); ++p)
            k(r.pivots[p], col) = -r.reduced(p, f);
        ++col;
    }
    return k;
}

GaussianRational det(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::domain_error("det: matrix is not square");
    Matrix a = m;
    const std::size_t n = a.rows();
    GaussianRational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col).is_zero())
            ++sel;
        if (sel == n)
            return GaussianRational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(sel, j), a(col, j));
            result = -result;
        }
        result *= a(col, col);
        GaussianRational inv = GaussianRational(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero())
                continue;
            GaussianRational f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a(i, j) -= f * a(col, j);
        }
    }
    return result;
}

}  // namespace kalg
