#pragma once

#include "kalg/rational.hpp"

#include <string>
#include <string_view>

namespace kalg {

/// Exact complex scalar a + bi with rational a, b: the coefficient field
/// for the whole library. Components are kept independently reduced, so
/// equality is component-wise.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(long long n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// re^2 + im^2, the multiplicative norm.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational operator+(const GaussianRational& o) const {
        return GaussianRational(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return GaussianRational(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero())
            throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.norm();
        GaussianRational num = *this * o.conj();
        return GaussianRational(num.re_ / n, num.im_ / n);
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    GaussianRational pow(unsigned k) const {
        GaussianRational acc(1);
        for (unsigned j = 0; j < k; ++j)
            acc *= *this;
        return acc;
    }

    /// Textual form: `a/b` when real, otherwise `a/b+c/di` or `a/b-c/di`;
    /// integers omit the `/1`.
    std::string to_string() const {
        if (is_real())
            return re_.to_string();
        std::string s = re_.to_string();
        s += im_.is_negative() ? '-' : '+';
        s += im_.abs().to_string();
        s += 'i';
        return s;
    }

    /// Accepts the canonical forms plus the pure-imaginary shorthands
    /// `c/di`, `i`, `-i`.
    static GaussianRational from_string(std::string_view text) {
        if (text.empty())
            throw std::invalid_argument("GaussianRational: empty string");
        // Find a top-level separator sign (not the leading sign).
        std::size_t sep = std::string_view::npos;
        for (std::size_t p = 1; p < text.size(); ++p) {
            if (text[p] == '+' || text[p] == '-') {
                sep = p;
                break;
            }
        }
        if (sep != std::string_view::npos) {
            if (text.back() != 'i')
                throw std::invalid_argument("GaussianRational: expected trailing 'i' in '" +
                                            std::string(text) + "'");
            Rational re = Rational::from_string(text.substr(0, sep));
            std::string_view imag = text.substr(sep, text.size() - sep - 1);
            Rational im = (imag == "+") ? Rational(1)
                        : (imag == "-") ? Rational(-1)
                                        : Rational::from_string(imag);
            return GaussianRational(re, im);
        }
        if (text.back() == 'i') {
            std::string_view mag = text.substr(0, text.size() - 1);
            Rational im = mag.empty() || mag == "+" ? Rational(1)
                        : mag == "-"                ? Rational(-1)
                                                    : Rational::from_string(mag);
            return GaussianRational(Rational(0), im);
        }
        return GaussianRational(Rational::from_string(text));
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational operator*(const Rational& q, const GaussianRational& z) {
    return GaussianRational(q) * z;
}
inline GaussianRational operator*(long long n, const GaussianRational& z) {
    return GaussianRational(n) * z;
}

}  // namespace kalg
