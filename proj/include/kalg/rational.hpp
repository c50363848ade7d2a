#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// Backed by boost::multiprecision::cpp_rational, which maintains exactly
/// these invariants.
class Rational {
public:
    Rational() = default;
    Rational(int n) : value_(n) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        value_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(BigRat(-value_)); }
    Rational operator+(const Rational& o) const { return Rational(BigRat(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(BigRat(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(BigRat(value_ * o.value_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(BigRat(value_ / o.value_));
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        if (value_ < o.value_) return std::strong_ordering::less;
        if (value_ > o.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(BigRat(1 / value_));
    }

    double to_double() const { return value_.convert_to<double>(); }

    /// Textual form `n` or `n/d`; integers omit the `/1`.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

    /// Parses `[+-]digits[/digits]`. Throws std::invalid_argument on anything else.
    static Rational from_string(std::string_view text) {
        if (text.empty())
            throw std::invalid_argument("Rational: empty string");
        std::size_t pos = 0;
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
        }
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits_start)
            throw std::invalid_argument("Rational: expected digits in '" + std::string(text) + "'");
        BigInt num(std::string(text.substr(digits_start, pos - digits_start)));
        BigInt den = 1;
        if (pos < text.size()) {
            if (text[pos] != '/')
                throw std::invalid_argument("Rational: unexpected character in '" + std::string(text) + "'");
            ++pos;
            std::size_t den_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == den_start || pos != text.size())
                throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
            den = BigInt(std::string(text.substr(den_start)));
            if (den == 0)
                throw std::domain_error("Rational: zero denominator");
        }
        if (neg)
            num = -num;
        return Rational(num, den);
    }

private:
    explicit Rational(const BigRat& v) : value_(v) {}
    BigRat value_;
};

inline Rational operator*(const BigInt& n, const Rational& q) { return Rational(n) * q; }
inline Rational operator*(long long n, const Rational& q) { return Rational(n) * q; }

}  // namespace kalg
