#include "kalg/jets.hpp"

#include <cmath>

namespace kalg {

Jet2Group jet_compose(const Jet2Group& a, const Jet2Group& b) {
    return Jet2Group(a.x1 * b.x1, a.x1 * b.x2 + b.x1 * b.x1 * a.x2);
}

Jet2Group jet_inverse(const Jet2Group& a) {
    Rational inv = a.x1.reciprocal();
    return Jet2Group(inv, -(a.x2 * inv * inv * inv));
}

Jet2Algebra jet_bracket(const Jet2Algebra& a, const Jet2Algebra& b) {
    return Jet2Algebra{Rational(0), a.x2 * b.x1 - a.x1 * b.x2};
}

Jet2GroupF jet_exp(const Jet2Algebra& a, const Rational& s) {
    double a1 = a.x1.to_double();
    double a2 = a.x2.to_double();
    double sd = s.to_double();
    double e = std::exp(sd * a1);
    if (a.x1.is_zero())
        return {1.0, sd * a2};
    return {e, a2 * e * (e - 1.0) / a1};
}

std::complex<double> chi_lambda(const Rational& lam, double x1) {
    if (!(x1 > 0.0))
        throw std::domain_error("chi_lambda: x1 must be positive");
    double phase = lam.to_double() * std::log(x1);
    return {std::cos(phase), std::sin(phase)};
}

std::complex<double> chi_lambda(const Rational& lam, const Jet2Group& g) {
    return chi_lambda(lam, g.x1.to_double());
}

Jet2Algebra jet_of_field(const FourierField& f) {
    if (!f.is_real_valued())
        throw std::domain_error("jet_of_field: field must be real-valued "
                                "(conjugate-symmetric coefficients)");
    if (!f.vanishes_at_zero())
        throw std::domain_error("jet_of_field: field must vanish at theta = 0");
    GaussianRational d1 = phi_k(1, f);
    GaussianRational d2 = phi_k(2, f);
    // Real-valuedness makes both derivatives real.
    return Jet2Algebra{d1.re(), d2.re()};
}

GeneratorMap p_extension_map(const Window& w) {
    return make_sigma(GaussianRational(1), LieElement::generator(AlgebraKind::K, 1), w);
}

}  // namespace kalg
