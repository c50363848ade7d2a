#pragma once

#include "kalg/fourier.hpp"
#include "kalg/morphisms.hpp"

#include <complex>

namespace kalg {

/// 2-jet (f'(0), f''(0)) of a circle diffeomorphism fixing 0: the quotient
/// group isomorphic to R_+ ⋉ R. The subgroup with x1 = 1 is the f'(0) = 1
/// layer; x1 = 1, x2 = 0 is the 2-flat layer.
struct Jet2Group {
    Rational x1;
    Rational x2;
    Jet2Group(Rational a, Rational b) : x1(std::move(a)), x2(std::move(b)) {
        if (!(x1 > Rational(0)))
            throw std::domain_error("Jet2Group: x1 must be positive");
    }
    static Jet2Group identity() { return Jet2Group(Rational(1), Rational(0)); }
    bool operator==(const Jet2Group& o) const = default;
};

/// Its Lie algebra (v'(0), v''(0)).
struct Jet2Algebra {
    Rational x1;
    Rational x2;
    bool operator==(const Jet2Algebra& o) const = default;
};

/// Floating-point group element for the exponential flows.
struct Jet2GroupF {
    double x1 = 1.0;
    double x2 = 0.0;
};

/// (X1, X2) * (Y1, Y2) = (X1 Y1, X1 Y2 + Y1^2 X2): the 2-jet chain rule.
Jet2Group jet_compose(const Jet2Group& a, const Jet2Group& b);

/// (1/x1, -x2/x1^3); compose(a, inverse(a)) is the identity.
Jet2Group jet_inverse(const Jet2Group& a);

/// [(x1,x2),(y1,y2)] = (0, x2 y1 - x1 y2).
Jet2Algebra jet_bracket(const Jet2Algebra& a, const Jet2Algebra& b);

/// One-parameter flow exp(s a): first component e^{s a1}; second
/// a2 e^{s a1}(e^{s a1}-1)/a1 for a1 != 0, else s a2. Solves the jet flow
/// equations x1' = a1 x1, x2' = a2 x1^2 + a1 x2.
Jet2GroupF jet_exp(const Jet2Algebra& a, const Rational& s);

/// The one-dimensional unitary character exp(i lambda log x1); depends only
/// on x1, so the x2 layer and everything 2-flat sit in its kernel.
std::complex<double> chi_lambda(const Rational& lam, const Jet2Group& g);
std::complex<double> chi_lambda(const Rational& lam, double x1);

/// Exact 2-jet of a real vector field vanishing at 0. Conjugate-symmetric
/// coefficients and f(0) = 0 are required.
Jet2Algebra jet_of_field(const FourierField& f);

/// The bridge into K: sigma with alpha = 1 on K = K_1, whose generator
/// images scale linearly in n on the dilation combinations and
/// quadratically on the translation combinations.
GeneratorMap p_extension_map(const Window& w);

}  // namespace kalg
