#pragma once

#include "kalg/lie.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace kalg {

/// Parses the element grammar
///   element := ['+'|'-'] term (('+'|'-') term)*
///   term    := [scalar '*'] gen
///   gen     := 'L[' int ']' | 'K[' int ']' | 'C'
/// Scalars use the exact textual form; complex scalars are parenthesized,
/// e.g. "3*K[1] - 2*K[2] + (0+1/2i)*C". A bare "0" denotes the zero element.
///
/// Without a kind hint, L generators select Vir, K generators select K, and
/// a central-only element defaults to K. Errors are position-annotated
/// std::invalid_argument (grammar) or std::domain_error (e.g. K[0]).
LieElement parse_element(std::string_view text,
                         std::optional<AlgebraKind> kind_hint = std::nullopt);

/// Deterministic inverse of parse_element: positive indices ascending, then
/// negative indices by magnitude, then the central term. parse(format(x))
/// returns x.
std::string format_element(const LieElement& x);

}  // namespace kalg
