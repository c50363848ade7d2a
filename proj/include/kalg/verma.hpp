#pragma once

#include "kalg/lie.hpp"
#include "kalg/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kalg {

/// Parameters of a lowest-weight module: K_n v = (h + i h' + n lambda) v for
/// n >= 1 and C v = c v. The Vir modules reuse the same struct with
/// H = h + i h' as the L_0 weight and lambda = 0.
struct Weight {
    Rational h;
    Rational h_prime;
    GaussianRational c;
    GaussianRational lambda;

    GaussianRational lowest() const { return GaussianRational(h, h_prime); }
    /// psi(K_n) (or psi applied to the Vir lowest-weight data), n >= 1.
    GaussianRational psi(long n) const {
        return lowest() + GaussianRational(Rational(BigInt(n))) * lambda;
    }
};

/// K_{n_1} ... K_{n_k} v with n_1 >= ... >= n_k, all <= -1; the empty
/// sequence is the lowest-weight vector v.
class PBWMonomial {
public:
    PBWMonomial() = default;
    explicit PBWMonomial(std::vector<long> indices);

    static PBWMonomial prepend(long n, const PBWMonomial& m);

    const std::vector<long>& indices() const { return indices_; }
    bool empty() const { return indices_.empty(); }
    long head() const { return indices_.front(); }
    PBWMonomial rest() const;
    long degree() const;

    bool operator==(const PBWMonomial& o) const = default;
    /// Degree-major, then lexicographic: a deterministic basis order.
    bool operator<(const PBWMonomial& o) const;

private:
    std::vector<long> indices_;
};

/// Finite combination of PBW monomials; no zero coefficients stored.
class ModuleVector {
public:
    ModuleVector() = default;

    static ModuleVector vacuum() {
        ModuleVector x;
        x.terms_[PBWMonomial()] = GaussianRational(1);
        return x;
    }
    static ModuleVector monomial(const PBWMonomial& m) {
        ModuleVector x;
        x.terms_[m] = GaussianRational(1);
        return x;
    }

    const std::map<PBWMonomial, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;

    void add_term(const PBWMonomial& m, const GaussianRational& q);

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector operator*(const GaussianRational& q) const;
    bool operator==(const ModuleVector& o) const = default;

private:
    std::map<PBWMonomial, GaussianRational> terms_;
};

/// Applies the generator with the given index (K_n or L_n by kind) to x,
/// rewriting into PBW form: positive generators commute through to v where
/// psi applies, negative generators prepend and re-sort through brackets.
/// kind must be K or Vir; index 0 is rejected for K.
ModuleVector act(AlgebraKind kind, long n, const Weight& w, const ModuleVector& x);

/// The central element acts by c everywhere.
ModuleVector act_central(const Weight& w, const ModuleVector& x);

/// Applies a word of generators, rightmost factor first.
ModuleVector act_word(AlgebraKind kind, const std::vector<long>& word, const Weight& w,
                      const ModuleVector& x);

/// The stable limit D w = lim_m K_m w, computed through D v = (h+ih')v and
/// D(K_n x) = n (K_n - D) x + K_n (D x). Requires lambda = 0 (apply the
/// reduction K_n -> K_n - n lambda I first).
ModuleVector d_apply(const Weight& w, const ModuleVector& x);

/// The Vir action induced by L_0 -> -D, L_n -> K_n - D, C -> C on a
/// lambda = 0 module; the result is the Verma module with weight -h-ih'.
ModuleVector vir_extend_act(long n, const Weight& w, const ModuleVector& x);

/// All PBW monomials of degree <= max_degree (or exactly max_degree), in
/// basis order.
std::vector<PBWMonomial> pbw_basis_up_to(long max_degree);
std::vector<PBWMonomial> pbw_basis_exact(long level);

/// gamma(x, y) = beta(star(y) x): sesquilinear, antilinear in y.
GaussianRational gram_pair(const Weight& w, const ModuleVector& x, const ModuleVector& y);

struct GramResult {
    std::vector<PBWMonomial> basis;  // all monomials of degree <= max_degree
    Matrix matrix;                   // gamma on that basis; Hermitian for real c
};

/// Matrix of the contravariant form gamma = beta∘alpha over the
/// degree-filtered PBW basis (the form couples different degrees). Requires
/// real c. The fill is embarrassingly parallel per entry; threads > 1 opts
/// in.
GramResult gram_k_form(const Weight& w, long max_degree, unsigned threads = 1);

/// Bilinear level pairing <u v, u' v> = psi(transpose(u) u') on the exact
/// level-N Vir monomials, transpose(L_{-n}) = L_n; entries are the Kac
/// determinant data evaluated at (H, c).
Matrix shapovalov_matrix(const GaussianRational& H, const GaussianRational& c, long level);

/// Phi_{alpha,beta}(H,c) =
///   (H + (alpha^2-1)(c-13)/24 + (alpha beta - 1)/2)
/// * (H + (beta^2-1)(c-13)/24 + (alpha beta - 1)/2)
/// + (alpha^2 - beta^2)^2 / 16.
GaussianRational ff_phi(long alpha, long beta, const GaussianRational& H,
                        const GaussianRational& c);

struct ReducibilityResult {
    bool reducible = false;
    long alpha = 0;
    long beta = 0;
};

/// Scans alpha*beta <= max_level for Phi_{alpha,beta}(-h-ih', c) = 0.
/// lambda-independent by construction.
ReducibilityResult reducibility_test(const Weight& w, long max_level);

/// A nonzero level-N solution of L_1 x = L_2 x = 0, if one exists: the
/// independent witness of reducibility.
std::optional<ModuleVector> singular_vector_search(const GaussianRational& H,
                                                   const GaussianRational& c, long level);

/// Textual form: "K[-2]K[-1]v"-style monomials with element-like
/// coefficients; kind selects the K or L symbol.
std::string format_module_vector(const ModuleVector& x, AlgebraKind kind);

}  // namespace kalg
