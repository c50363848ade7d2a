#pragma once

#include "kalg/gaussian.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace kalg {

/// The four algebras handled by the library. Witt and K0 carry no central
/// element; Vir and K are their central extensions.
enum class AlgebraKind { Witt, Vir, K0, K };

inline bool is_extended(AlgebraKind k) { return k == AlgebraKind::Vir || k == AlgebraKind::K; }
inline bool is_k_family(AlgebraKind k) { return k == AlgebraKind::K0 || k == AlgebraKind::K; }

std::string kind_name(AlgebraKind k);

/// Truncation device for the infinite-dimensional algebras: indices n with
/// 1 <= |n| <= bound for the K family, |n| <= bound for the L family.
struct Window {
    long bound = 1;
    explicit Window(long b) : bound(b) {
        if (b < 1)
            throw std::domain_error("Window: bound must be >= 1");
    }
    bool contains_k_index(long n) const { return n != 0 && -bound <= n && n <= bound; }
    bool contains_l_index(long n) const { return -bound <= n && n <= bound; }
};

/// A finite combination of basis symbols L_n or K_n plus a central
/// coefficient, tagged by algebra kind.
///
/// Invariants: no zero coefficients are stored; K-family elements never
/// contain index 0 (the basis has no K_0); the central coefficient is zero
/// for the non-extended kinds.
class LieElement {
public:
    explicit LieElement(AlgebraKind kind) : kind_(kind) {}

    static LieElement zero(AlgebraKind kind) { return LieElement(kind); }
    static LieElement generator(AlgebraKind kind, long n);
    static LieElement central(AlgebraKind kind, const GaussianRational& c);

    AlgebraKind kind() const { return kind_; }
    const std::map<long, GaussianRational>& terms() const { return terms_; }
    const GaussianRational& central_coeff() const { return central_; }

    GaussianRational coeff(long n) const {
        auto it = terms_.find(n);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    bool is_zero() const { return terms_.empty() && central_.is_zero(); }

    /// Adds q to the coefficient of index n, keeping the invariants.
    void add_term(long n, const GaussianRational& q);
    void add_central(const GaussianRational& q);

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator-() const;
    LieElement operator*(const GaussianRational& q) const;
    bool operator==(const LieElement& o) const = default;

private:
    AlgebraKind kind_;
    std::map<long, GaussianRational> terms_;
    GaussianRational central_;
};

inline LieElement operator*(const GaussianRational& q, const LieElement& x) { return x * q; }

/// The Lie bracket of the element's kind, extended bilinearly. Central terms
/// appear only for the extended kinds. Throws on a kind mismatch.
LieElement bracket(const LieElement& x, const LieElement& y);

/// The *-operation: indices negated, coefficients conjugated.
LieElement star(const LieElement& x);

/// Rewrites a K-family element over the L basis via K_n = L_n - L_0.
LieElement embed_in_vir(const LieElement& x);

/// Inverse of embed_in_vir on its image. Requires the L-coefficient sum to
/// vanish ("not in K0" is signalled otherwise).
LieElement project_to_k(const LieElement& x);

/// The jet functional of order k >= 1: phi_k(K_n) = phi_k(L_n) = i (i n)^k.
/// The central coefficient is ignored. Throws for k <= 0.
GaussianRational phi_k(long k, const LieElement& x);

/// phi_0: i times the coefficient sum on the L family; identically zero on
/// the K family by construction.
GaussianRational phi_0(const LieElement& x);

/// The iterated-difference basis element
/// M^k_n = sum_{l=0}^{k+1} (-1)^l C(k+1,l) L_{n+l}, a Witt element lying in
/// K_k (all of phi_1..phi_k vanish on it).
LieElement m_basis(long k, long n);

}  // namespace kalg
