#pragma once

#include "kalg/lie.hpp"

#include <map>

namespace kalg {

/// A trigonometric polynomial sum a_n e^{i n theta}, the vector-field
/// realization of the L/K symbols. No zero coefficients are stored.
class FourierField {
public:
    FourierField() = default;

    const std::map<long, GaussianRational>& coefficients() const { return coeffs_; }

    GaussianRational coeff(long n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? GaussianRational() : it->second;
    }

    void add_coeff(long n, const GaussianRational& q) {
        if (q.is_zero())
            return;
        auto [it, inserted] = coeffs_.try_emplace(n, q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// f(0) = sum of the coefficients.
    GaussianRational value_at_zero() const {
        GaussianRational s;
        for (const auto& [n, q] : coeffs_)
            s += q;
        return s;
    }

    bool vanishes_at_zero() const { return value_at_zero().is_zero(); }

    /// Real-valued on the circle: a_{-n} = conj(a_n).
    bool is_real_valued() const {
        for (const auto& [n, q] : coeffs_)
            if (!(coeff(-n) == q.conj()))
                return false;
        return true;
    }

    FourierField operator+(const FourierField& o) const;
    FourierField operator-(const FourierField& o) const;
    FourierField operator*(const GaussianRational& q) const;
    bool operator==(const FourierField& o) const = default;

private:
    std::map<long, GaussianRational> coeffs_;
};

/// [f,g] = f g' - f' g, computed as an exact convolution.
FourierField field_bracket(const FourierField& f, const FourierField& g);

/// The generator correspondence L_n -> i e^{i n theta},
/// K_n -> i (e^{i n theta} - 1). The central coefficient must vanish.
FourierField to_fourier(const LieElement& x);

/// k-th derivative at theta = 0: sum a_n (i n)^k, for k >= 1.
GaussianRational phi_k(long k, const FourierField& f);

}  // namespace kalg
