#include "kalg/span.hpp"

#include <stdexcept>

namespace kalg {

std::size_t k_index_to_col(long n, const Window& w) {
    if (!w.contains_k_index(n))
        throw std::domain_error("index outside window");
    if (n < 0)
        return static_cast<std::size_t>(n + w.bound);
    return static_cast<std::size_t>(w.bound + n - 1);
}

long col_to_k_index(std::size_t col, const Window& w) {
    long c = static_cast<long>(col);
    if (c < w.bound)
        return c - w.bound;
    return c - w.bound + 1;
}

Matrix element_to_row(const LieElement& x, const Window& w, bool with_central) {
    if (!is_k_family(x.kind()))
        throw std::domain_error("element_to_row: expected a K-family element");
    std::size_t cols = 2 * static_cast<std::size_t>(w.bound) + (with_central ? 1 : 0);
    Matrix row(1, cols);
    for (const auto& [n, q] : x.terms())
        row(0, k_index_to_col(n, w)) = q;
    if (!x.central_coeff().is_zero()) {
        if (!with_central)
            throw std::domain_error("element_to_row: unexpected central part");
        row(0, cols - 1) = x.central_coeff();
    }
    return row;
}

Matrix element_to_row_truncated(const LieElement& x, const Window& w, bool with_central) {
    std::size_t cols = 2 * static_cast<std::size_t>(w.bound) + (with_central ? 1 : 0);
    Matrix row(1, cols);
    for (const auto& [n, q] : x.terms())
        if (w.contains_k_index(n))
            row(0, k_index_to_col(n, w)) = q;
    if (with_central && !x.central_coeff().is_zero())
        row(0, cols - 1) = x.central_coeff();
    return row;
}

LieElement row_to_element(const Matrix& rows, std::size_t r, const Window& w, AlgebraKind kind,
                          bool with_central) {
    LieElement x(kind);
    std::size_t k_cols = 2 * static_cast<std::size_t>(w.bound);
    for (std::size_t c = 0; c < k_cols; ++c)
        x.add_term(col_to_k_index(c, w), rows(r, c));
    if (with_central)
        x.add_central(rows(r, k_cols));
    return x;
}

namespace {

Matrix drop_zero_rows(const Matrix& m, std::size_t rank) {
    Matrix out(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
    return out;
}

}  // namespace

SpanWindow span_from_rows(const Matrix& rows, const Window& w, bool with_central) {
    RrefResult r = rref(rows);
    return SpanWindow{w, with_central, drop_zero_rows(r.reduced, r.rank)};
}

SpanWindow span_from_elements(const std::vector<LieElement>& xs, const Window& w,
                              bool with_central) {
    std::size_t cols = 2 * static_cast<std::size_t>(w.bound) + (with_central ? 1 : 0);
    Matrix rows(xs.size(), cols);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Matrix row = element_to_row(xs[i], w, with_central);
        for (std::size_t j = 0; j < cols; ++j)
            rows(i, j) = row(0, j);
    }
    return span_from_rows(rows, w, with_central);
}

SpanWindow span_union(const SpanWindow& a, const SpanWindow& b) {
    if (a.window.bound != b.window.bound || a.with_central != b.with_central)
        throw std::invalid_argument("span_union: incompatible spans");
    return span_from_rows(a.rows.vstack(b.rows), a.window, a.with_central);
}

bool span_contains_row(const SpanWindow& s, const Matrix& row) {
    RrefResult r = rref(s.rows.vstack(row));
    return r.rank == s.rank();
}

bool span_equal(const SpanWindow& a, const SpanWindow& b) {
    if (a.rank() != b.rank())
        return false;
    return span_union(a, b).rank() == a.rank();
}

SpanWindow restrict_to_interior(const SpanWindow& s, long abs_bound) {
    // Combinations x of the rows with x^T B vanishing on every out-of-bound
    // coordinate, i.e. the null space of (B restricted to those columns)^T.
    std::vector<std::size_t> outside;
    std::size_t k_cols = 2 * static_cast<std::size_t>(s.window.bound);
    for (std::size_t c = 0; c < k_cols; ++c) {
        long n = col_to_k_index(c, s.window);
        if (n < -abs_bound || n > abs_bound)
            outside.push_back(c);
    }
    if (outside.empty())
        return s;
    Matrix block(outside.size(), s.rows.rows());
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = 0; j < s.rows.rows(); ++j)
            block(i, j) = s.rows(j, outside[i]);
    Matrix combos = kernel_basis(block);  // columns
    Matrix restricted(combos.cols(), s.rows.cols());
    for (std::size_t k = 0; k < combos.cols(); ++k)
        for (std::size_t j = 0; j < s.rows.cols(); ++j) {
            GaussianRational acc;
            for (std::size_t r = 0; r < s.rows.rows(); ++r)
                acc += combos(r, k) * s.rows(r, j);
            restricted(k, j) = acc;
        }
    return span_from_rows(restricted, s.window, s.with_central);
}

namespace {

SpanWindow functional_kernel_shadow(const std::vector<long>& orders, const Window& w) {
    std::size_t cols = 2 * static_cast<std::size_t>(w.bound);
    Matrix conditions(orders.size(), cols);
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) {
            long n = col_to_k_index(c, w);
            GaussianRational in = GaussianRational::i() * GaussianRational(Rational(BigInt(n)));
            conditions(i, c) = GaussianRational::i() * in.pow(static_cast<unsigned>(orders[i]));
        }
    Matrix k = kernel_basis(conditions);
    return span_from_rows(k.transpose(), w, false);
}

}  // namespace

SpanWindow kchain_shadow(long k, const Window& w) {
    std::vector<long> orders;
    for (long j = 1; j <= k; ++j)
        orders.push_back(j);
    return functional_kernel_shadow(orders, w);
}

SpanWindow phi13_shadow(const Window& w) { return functional_kernel_shadow({1, 3}, w); }

}  // namespace kalg
