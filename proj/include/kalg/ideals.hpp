#pragma once

#include "kalg/fourier.hpp"
#include "kalg/span.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kalg {

/// Result of matching a window span against the known ideals of K0.
struct IdealDescriptor {
    enum class Tag { Zero, KChain, Phi1CapPhi3, Unclassified };
    Tag tag = Tag::Unclassified;
    long k = 0;  // meaningful for KChain; KChain(0) is all of K0

    bool operator==(const IdealDescriptor& o) const = default;
    std::string to_string() const;
};

/// Largest k with phi_1(x) = ... = phi_k(x) = 0; 0 when phi_1 already fails,
/// nullopt ("infinite") for the zero element. Finite for nonzero input: the
/// scan stops at the number of distinct frequencies, beyond which total
/// vanishing would force x = 0 (Vandermonde).
std::optional<long> vanishing_order(const LieElement& x);
std::optional<long> vanishing_order(const FourierField& f);

/// Smallest subspace of the window-truncated K0 containing the generators
/// and closed under bracketing with every window generator whenever the
/// bracket stays representable in the window (escaping brackets are skipped,
/// never truncated). Computed by span stabilization; every span vector lies
/// in the true generated ideal, and conclusions are drawn on the window
/// interior.
SpanWindow ideal_closure_window(const std::vector<LieElement>& generators, const Window& w);

/// Span of all [M^k_m, M^k_n] whose operands and result fit in the window.
SpanWindow derived_subalgebra_window(long k, const Window& w);

/// Matches the span, on the safe interior, against the window shadows of
/// {0}, the K_k chain, and ker phi_1 cap ker phi_3. Returns Unclassified
/// when the window cannot distinguish a unique match.
IdealDescriptor classify_ideal_window(const SpanWindow& span);

}  // namespace kalg
