#include "kalg/fourier.hpp"

#include <stdexcept>

namespace kalg {

FourierField FourierField::operator+(const FourierField& o) const {
    FourierField r = *this;
    for (const auto& [n, q] : o.coeffs_)
        r.add_coeff(n, q);
    return r;
}

FourierField FourierField::operator-(const FourierField& o) const {
    FourierField r = *this;
    for (const auto& [n, q] : o.coeffs_)
        r.add_coeff(n, -q);
    return r;
}

FourierField FourierField::operator*(const GaussianRational& q) const {
    FourierField r;
    for (const auto& [n, c] : coeffs_)
        r.add_coeff(n, c * q);
    return r;
}

FourierField field_bracket(const FourierField& f, const FourierField& g) {
    // f g' - f' g = sum_{m,n} a_m b_n i (n - m) e^{i (m+n) theta}
    FourierField r;
    for (const auto& [m, a] : f.coefficients())
        for (const auto& [n, b] : g.coefficients()) {
            if (m == n)
                continue;
            GaussianRational w =
                a * b * GaussianRational::i() * GaussianRational(Rational(BigInt(n) - m));
            r.add_coeff(m + n, w);
        }
    return r;
}

FourierField to_fourier(const LieElement& x) {
    if (!x.central_coeff().is_zero())
        throw std::domain_error("to_fourier: central coefficient must be zero");
    FourierField r;
    const bool k_family = is_k_family(x.kind());
    for (const auto& [n, q] : x.terms()) {
        r.add_coeff(n, q * GaussianRational::i());
        if (k_family)
            r.add_coeff(0, -(q * GaussianRational::i()));
    }
    return r;
}

GaussianRational phi_k(long k, const FourierField& f) {
    if (k <= 0)
        throw std::domain_error("phi_k: k must be >= 1");
    GaussianRational acc;
    for (const auto& [n, q] : f.coefficients()) {
        GaussianRational in = GaussianRational::i() * GaussianRational(Rational(BigInt(n)));
        acc += q * in.pow(static_cast<unsigned>(k));
    }
    return acc;
}

}  // namespace kalg
