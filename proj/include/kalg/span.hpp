#pragma once

#include "kalg/lie.hpp"
#include "kalg/matrix.hpp"

#include <vector>

namespace kalg {

/// Finite-dimensional shadow of a subspace of K0 (optionally of K, with a
/// trailing central coordinate). Rows are coordinate vectors over the
/// window's K-generator coordinates, kept in reduced echelon form, so
/// rank = row count.
struct SpanWindow {
    Window window;
    bool with_central = false;
    Matrix rows;  // RREF, no zero rows

    std::size_t rank() const { return rows.rows(); }
    std::size_t coord_count() const {
        return 2 * static_cast<std::size_t>(window.bound) + (with_central ? 1 : 0);
    }
};

/// K-coordinate layout for a window: indices -N..-1 then 1..N, ascending,
/// followed by the central coordinate when present.
std::size_t k_index_to_col(long n, const Window& w);
long col_to_k_index(std::size_t col, const Window& w);

/// Coordinate row of a K-family element. Throws if the support leaves the
/// window (or a central part is present without a central coordinate).
Matrix element_to_row(const LieElement& x, const Window& w, bool with_central);

/// Same, but silently drops coefficients whose index leaves the window.
Matrix element_to_row_truncated(const LieElement& x, const Window& w, bool with_central);

LieElement row_to_element(const Matrix& row, std::size_t r, const Window& w, AlgebraKind kind,
                          bool with_central);

SpanWindow span_from_rows(const Matrix& rows, const Window& w, bool with_central);
SpanWindow span_from_elements(const std::vector<LieElement>& xs, const Window& w,
                              bool with_central);

/// Row space of the union.
SpanWindow span_union(const SpanWindow& a, const SpanWindow& b);

bool span_contains_row(const SpanWindow& s, const Matrix& row);
bool span_equal(const SpanWindow& a, const SpanWindow& b);

/// The set of span vectors supported on |index| <= abs_bound (central
/// coordinate, when present, always allowed). Computed exactly from the
/// null space of the out-of-bound block.
SpanWindow restrict_to_interior(const SpanWindow& s, long abs_bound);

/// Window shadow of K_k: the kernel of phi_1..phi_k on the window
/// coordinates (k = 0 gives the whole window space).
SpanWindow kchain_shadow(long k, const Window& w);

/// Window shadow of ker phi_1 cap ker phi_3.
SpanWindow phi13_shadow(const Window& w);

}  // namespace kalg
