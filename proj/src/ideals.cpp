#include "kalg/ideals.hpp"

#include <set>
#include <stdexcept>

namespace kalg {

std::string IdealDescriptor::to_string() const {
    switch (tag) {
        case Tag::Zero: return "Zero";
        case Tag::KChain: return "KChain(" + std::to_string(k) + ")";
        case Tag::Phi1CapPhi3: return "Phi1CapPhi3";
        case Tag::Unclassified: return "Unclassified";
    }
    return "?";
}

std::optional<long> vanishing_order(const LieElement& x) {
    if (!is_k_family(x.kind()))
        throw std::domain_error("vanishing_order: expected a K-family element");
    if (x.terms().empty())
        return std::nullopt;
    long bound = static_cast<long>(x.terms().size());
    for (long k = 1; k <= bound; ++k)
        if (!phi_k(k, x).is_zero())
            return k - 1;
    return bound;  // unreachable for nonzero input; kept as a hard stop
}

std::optional<long> vanishing_order(const FourierField& f) {
    long bound = 0;
    for (const auto& [n, q] : f.coefficients())
        if (n != 0)
            ++bound;
    if (bound == 0)
        return f.is_zero() ? std::nullopt : std::optional<long>(0);
    for (long k = 1; k <= bound; ++k)
        if (!phi_k(k, f).is_zero())
            return k - 1;
    return std::nullopt;
}

SpanWindow ideal_closure_window(const std::vector<LieElement>& generators, const Window& w) {
    const std::size_t cols = 2 * static_cast<std::size_t>(w.bound);
    Matrix rows(generators.size(), cols);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].kind() != AlgebraKind::K0)
            throw std::domain_error("ideal_closure_window: generators must be K0 elements");
        Matrix row = element_to_row(generators[i], w, false);  // throws if outside window
        for (std::size_t j = 0; j < cols; ++j)
            rows(i, j) = row(0, j);
    }
    SpanWindow span = span_from_rows(rows, w, false);

    // Bracket every basis row against every window generator, keeping only
    // brackets whose support stays representable. Truncating escaped terms
    // instead would poison the interior: a second-generation bracket of a
    // truncated row regenerates low-index terms from the dropped part, and
    // the iteration then saturates the whole window. Skipped brackets keep
    // every span vector inside the true ideal; the price is paid at the
    // boundary only, which is why conclusions are drawn on the interior.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Matrix> fresh;
        for (std::size_t r = 0; r < span.rank(); ++r) {
            LieElement e = row_to_element(span.rows, r, w, AlgebraKind::K0, false);
            for (long j = -w.bound; j <= w.bound; ++j) {
                if (j == 0)
                    continue;
                LieElement b = bracket(LieElement::generator(AlgebraKind::K0, j), e);
                bool inside = true;
                for (const auto& [idx, q] : b.terms())
                    if (!w.contains_k_index(idx)) {
                        inside = false;
                        break;
                    }
                if (inside)
                    fresh.push_back(element_to_row(b, w, false));
            }
        }
        Matrix stacked = span.rows;
        for (const Matrix& row : fresh)
            stacked = stacked.vstack(row);
        SpanWindow next = span_from_rows(stacked, w, false);
        if (next.rank() > span.rank()) {
            span = next;
            grew = true;
        }
    }
    return span;
}

SpanWindow derived_subalgebra_window(long k, const Window& w) {
    if (k < 0)
        throw std::domain_error("derived_subalgebra_window: k must be >= 0");
    std::vector<LieElement> results;
    // M^k_m has L-support {m, ..., m+k+1}.
    for (long m = -w.bound; m + k + 1 <= w.bound; ++m)
        for (long n = m + 1; n + k + 1 <= w.bound; ++n) {
            LieElement b = bracket(project_to_k(m_basis(k, m)), project_to_k(m_basis(k, n)));
            bool inside = true;
            for (const auto& [idx, q] : b.terms())
                if (!w.contains_k_index(idx)) {
                    inside = false;
                    break;
                }
            if (inside)
                results.push_back(b);
        }
    return span_from_elements(results, w, false);
}

namespace {

// A candidate only counts as matched when its interior shadow is nonzero;
// at tiny interiors every deep ideal restricts to {0} and a zero-zero
// comparison distinguishes nothing.
bool informative_match(const SpanWindow& span, const SpanWindow& candidate, long interior) {
    if (interior < 1)
        return false;
    SpanWindow rhs = restrict_to_interior(candidate, interior);
    if (rhs.rank() == 0)
        return false;
    SpanWindow lhs = restrict_to_interior(span, interior);
    return span_equal(lhs, rhs);
}

}  // namespace

IdealDescriptor classify_ideal_window(const SpanWindow& span) {
    if (span.with_central)
        throw std::domain_error("classify_ideal_window: span must not carry a central coordinate");
    if (span.rank() == 0)
        return {IdealDescriptor::Tag::Zero, 0};

    const long n = span.window.bound;
    // Candidates in codimension order: K_c has codimension c, and
    // ker phi_1 cap ker phi_3 sits at codimension 2 next to K_2. The first
    // informative match wins; two matches at the same codimension mean the
    // window cannot separate them.
    for (long c = 0; n - (c + 2) >= 1; ++c) {
        std::vector<IdealDescriptor> matches;
        if (informative_match(span, kchain_shadow(c, span.window), n - (c + 2)))
            matches.push_back({IdealDescriptor::Tag::KChain, c});
        if (c == 2 && informative_match(span, phi13_shadow(span.window), n - 5))
            matches.push_back({IdealDescriptor::Tag::Phi1CapPhi3, 0});
        if (matches.size() == 1)
            return matches.front();
        if (matches.size() > 1)
            return {IdealDescriptor::Tag::Unclassified, 0};
    }
    return {IdealDescriptor::Tag::Unclassified, 0};
}

}  // namespace kalg
