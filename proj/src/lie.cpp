#include "kalg/lie.hpp"

#include <stdexcept>

namespace kalg {

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Witt: return "Witt";
        case AlgebraKind::Vir: return "Vir";
        case AlgebraKind::K0: return "K0";
        case AlgebraKind::K: return "K";
    }
    return "?";
}

LieElement LieElement::generator(AlgebraKind kind, long n) {
    if (is_k_family(kind) && n == 0)
        throw std::domain_error("index 0 not in K basis");
    LieElement x(kind);
    x.terms_[n] = GaussianRational(1);
    return x;
}

LieElement LieElement::central(AlgebraKind kind, const GaussianRational& c) {
    if (!is_extended(kind))
        throw std::domain_error("central element only exists in Vir and K");
    LieElement x(kind);
    x.central_ = c;
    return x;
}

void LieElement::add_term(long n, const GaussianRational& q) {
    if (is_k_family(kind_) && n == 0)
        throw std::domain_error("index 0 not in K basis");
    if (q.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(n, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void LieElement::add_central(const GaussianRational& q) {
    if (!is_extended(kind_)) {
        if (!q.is_zero())
            throw std::domain_error("central coefficient not allowed in " + kind_name(kind_));
        return;
    }
    central_ += q;
}

LieElement LieElement::operator+(const LieElement& o) const {
    if (kind_ != o.kind_)
        throw std::domain_error("kind mismatch: " + kind_name(kind_) + " vs " + kind_name(o.kind_));
    LieElement r = *this;
    for (const auto& [n, q] : o.terms_)
        r.add_term(n, q);
    if (is_extended(kind_))
        r.central_ += o.central_;
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const { return *this + (-o); }

LieElement LieElement::operator-() const {
    LieElement r(kind_);
    for (const auto& [n, q] : terms_)
        r.terms_[n] = -q;
    r.central_ = -central_;
    return r;
}

LieElement LieElement::operator*(const GaussianRational& q) const {
    LieElement r(kind_);
    if (q.is_zero())
        return r;
    for (const auto& [n, c] : terms_)
        r.terms_[n] = c * q;
    r.central_ = central_ * q;
    return r;
}

namespace {

// m (m^2 - 1) / 12, the Virasoro central charge weight.
GaussianRational central_weight(long m) {
    BigInt mm(m);
    return GaussianRational(Rational(mm * (mm * mm - 1), 12));
}

// Structure constants on generator pairs, added into `out` with weight w.
void bracket_generators(AlgebraKind kind, long m, long n, const GaussianRational& w,
                        LieElement& out) {
    if (is_k_family(kind)) {
        if (m == n)
            return;
        if (m == -n) {
            // [K_m, K_{-m}] = -m K_m - m K_{-m} (+ C/12 m(m^2-1))
            out.add_term(m, w * GaussianRational(Rational(BigInt(-m))));
            out.add_term(-m, w * GaussianRational(Rational(BigInt(-m))));
            if (kind == AlgebraKind::K)
                out.add_central(w * central_weight(m));
            return;
        }
        // [K_m, K_n] = (m-n) K_{m+n} - m K_m + n K_n
        out.add_term(m + n, w * GaussianRational(Rational(BigInt(m) - n)));
        out.add_term(m, w * GaussianRational(Rational(BigInt(-m))));
        out.add_term(n, w * GaussianRational(Rational(BigInt(n))));
        return;
    }
    // [L_m, L_n] = (m-n) L_{m+n} (+ C/12 m(m^2-1) delta_{m,-n})
    if (m == n)
        return;
    out.add_term(m + n, w * GaussianRational(Rational(BigInt(m) - n)));
    if (kind == AlgebraKind::Vir && m == -n)
        out.add_central(w * central_weight(m));
}

}  // namespace

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.kind() != y.kind())
        throw std::domain_error("bracket: kind mismatch: " + kind_name(x.kind()) + " vs " +
                                kind_name(y.kind()));
    LieElement out(x.kind());
    for (const auto& [m, a] : x.terms())
        for (const auto& [n, b] : y.terms())
            bracket_generators(x.kind(), m, n, a * b, out);
    return out;
}

LieElement star(const LieElement& x) {
    LieElement r(x.kind());
    for (const auto& [n, q] : x.terms())
        r.add_term(-n, q.conj());
    if (is_extended(x.kind()))
        r.add_central(x.central_coeff().conj());
    return r;
}

LieElement embed_in_vir(const LieElement& x) {
    if (!is_k_family(x.kind()))
        throw std::domain_error("embed_in_vir: expected a K-family element");
    AlgebraKind target = x.kind() == AlgebraKind::K ? AlgebraKind::Vir : AlgebraKind::Witt;
    LieElement r(target);
    GaussianRational sum;
    for (const auto& [n, q] : x.terms()) {
        r.add_term(n, q);
        sum += q;
    }
    r.add_term(0, -sum);
    if (x.kind() == AlgebraKind::K)
        r.add_central(x.central_coeff());
    return r;
}

LieElement project_to_k(const LieElement& x) {
    if (is_k_family(x.kind()))
        throw std::domain_error("project_to_k: expected an L-family element");
    GaussianRational sum;
    for (const auto& [n, q] : x.terms())
        sum += q;
    if (!sum.is_zero())
        throw std::domain_error("project_to_k: not in K0 (coefficient sum is " +
                                (GaussianRational::i() * sum).to_string() + ", phi_0 nonzero)");
    AlgebraKind target = x.kind() == AlgebraKind::Vir ? AlgebraKind::K : AlgebraKind::K0;
    LieElement r(target);
    for (const auto& [n, q] : x.terms())
        if (n != 0)
            r.add_term(n, q);
    if (x.kind() == AlgebraKind::Vir)
        r.add_central(x.central_coeff());
    return r;
}

GaussianRational phi_k(long k, const LieElement& x) {
    if (k <= 0)
        throw std::domain_error("phi_k: k must be >= 1 (phi_0 is exposed separately)");
    GaussianRational acc;
    for (const auto& [n, q] : x.terms()) {
        // i (i n)^k
        GaussianRational in = GaussianRational::i() * GaussianRational(Rational(BigInt(n)));
        acc += q * GaussianRational::i() * in.pow(static_cast<unsigned>(k));
    }
    return acc;
}

GaussianRational phi_0(const LieElement& x) {
    if (is_k_family(x.kind()))
        return GaussianRational();  // trivially zero on the K family
    GaussianRational sum;
    for (const auto& [n, q] : x.terms())
        sum += q;
    return GaussianRational::i() * sum;
}

LieElement m_basis(long k, long n) {
    if (k < 0)
        throw std::domain_error("m_basis: k must be >= 0");
    LieElement r(AlgebraKind::Witt);
    BigInt binom = 1;
    for (long l = 0; l <= k + 1; ++l) {
        GaussianRational c{Rational(l % 2 == 0 ? binom : -binom)};
        r.add_term(n + l, c);
        binom = binom * (k + 1 - l) / (l + 1);
    }
    return r;
}

}  // namespace kalg
