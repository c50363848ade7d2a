#include "kalg/verma.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace kalg {

namespace {

GaussianRational qn(long n) { return GaussianRational(Rational(BigInt(n))); }

}  // namespace

PBWMonomial::PBWMonomial(std::vector<long> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] > -1)
            throw std::domain_error("PBWMonomial: indices must be <= -1");
        if (i > 0 && indices_[i - 1] < indices_[i])
            throw std::domain_error("PBWMonomial: indices must be weakly decreasing");
    }
}

PBWMonomial PBWMonomial::prepend(long n, const PBWMonomial& m) {
    PBWMonomial r;
    r.indices_.reserve(m.indices_.size() + 1);
    r.indices_.push_back(n);
    r.indices_.insert(r.indices_.end(), m.indices_.begin(), m.indices_.end());
    if (n > -1 || (!m.indices_.empty() && n < m.indices_.front()))
        throw std::domain_error("PBWMonomial::prepend: order violated");
    return r;
}

PBWMonomial PBWMonomial::rest() const {
    PBWMonomial r;
    r.indices_.assign(indices_.begin() + 1, indices_.end());
    return r;
}

long PBWMonomial::degree() const {
    long d = 0;
    for (long n : indices_)
        d -= n;
    return d;
}

bool PBWMonomial::operator<(const PBWMonomial& o) const {
    long da = degree(), db = o.degree();
    if (da != db)
        return da < db;
    return indices_ < o.indices_;
}

long ModuleVector::degree() const {
    long d = 0;
    for (const auto& [m, q] : terms_)
        d = std::max(d, m.degree());
    return d;
}

void ModuleVector::add_term(const PBWMonomial& m, const GaussianRational& q) {
    if (q.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (const auto& [m, q] : o.terms_)
        r.add_term(m, q);
    return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (const auto& [m, q] : o.terms_)
        r.add_term(m, -q);
    return r;
}

ModuleVector ModuleVector::operator*(const GaussianRational& q) const {
    ModuleVector r;
    if (q.is_zero())
        return r;
    for (const auto& [m, c] : terms_)
        r.add_term(m, c * q);
    return r;
}

namespace {

ModuleVector act_element(AlgebraKind kind, const LieElement& e, const Weight& w,
                         const ModuleVector& x);

// Applies one generator to one monomial, straightening into PBW order. Each
// step either shortens the monomial (bracket terms) or moves the new factor
// one slot inward, so (degree, inversions) drops lexicographically.
ModuleVector apply_to_monomial(AlgebraKind kind, long n, const Weight& w, const PBWMonomial& m) {
    ModuleVector out;
    if (m.empty()) {
        if (kind == AlgebraKind::K) {
            if (n >= 1) {
                out.add_term(PBWMonomial(), w.psi(n));
                return out;
            }
            out.add_term(PBWMonomial({n}), GaussianRational(1));
            return out;
        }
        // Vir: L_n v = 0 for n >= 1, L_0 v = H v.
        if (n >= 1)
            return out;
        if (n == 0) {
            out.add_term(PBWMonomial(), w.lowest());
            return out;
        }
        out.add_term(PBWMonomial({n}), GaussianRational(1));
        return out;
    }
    long head = m.head();
    if (n <= -1 && n >= head) {
        out.add_term(PBWMonomial::prepend(n, m), GaussianRational(1));
        return out;
    }
    // g_n g_head X = g_head (g_n X) + [g_n, g_head] X
    PBWMonomial rest = m.rest();
    ModuleVector rest_vec = ModuleVector::monomial(rest);
    ModuleVector inner = apply_to_monomial(kind, n, w, rest);
    ModuleVector swapped = act(kind, head, w, inner);
    LieElement br = bracket(LieElement::generator(kind, n), LieElement::generator(kind, head));
    return swapped + act_element(kind, br, w, rest_vec);
}

ModuleVector act_element(AlgebraKind kind, const LieElement& e, const Weight& w,
                         const ModuleVector& x) {
    ModuleVector out;
    for (const auto& [j, q] : e.terms())
        out = out + act(kind, j, w, x) * q;
    if (!e.central_coeff().is_zero())
        out = out + x * (e.central_coeff() * w.c);
    return out;
}

}  // namespace

ModuleVector act(AlgebraKind kind, long n, const Weight& w, const ModuleVector& x) {
    if (kind != AlgebraKind::K && kind != AlgebraKind::Vir)
        throw std::domain_error("act: kind must be K or Vir");
    if (kind == AlgebraKind::K && n == 0)
        throw std::domain_error("act: index 0 on K-kind");
    ModuleVector out;
    for (const auto& [m, q] : x.terms())
        out = out + apply_to_monomial(kind, n, w, m) * q;
    return out;
}

ModuleVector act_central(const Weight& w, const ModuleVector& x) { return x * w.c; }

ModuleVector act_word(AlgebraKind kind, const std::vector<long>& word, const Weight& w,
                      const ModuleVector& x) {
    ModuleVector out = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = act(kind, *it, w, out);
    return out;
}

namespace {

ModuleVector d_vec(const Weight& w, const ModuleVector& x);

ModuleVector d_mono(const Weight& w, const PBWMonomial& m) {
    if (m.empty()) {
        ModuleVector out;
        out.add_term(PBWMonomial(), w.lowest());
        return out;
    }
    long n = m.head();
    ModuleVector rest = ModuleVector::monomial(m.rest());
    ModuleVector d_rest = d_vec(w, rest);
    // D(K_n X) = n (K_n - D) X + K_n (D X)
    return (act(AlgebraKind::K, n, w, rest) - d_rest) * qn(n) + act(AlgebraKind::K, n, w, d_rest);
}

ModuleVector d_vec(const Weight& w, const ModuleVector& x) {
    ModuleVector out;
    for (const auto& [m, q] : x.terms())
        out = out + d_mono(w, m) * q;
    return out;
}

}  // namespace

ModuleVector d_apply(const Weight& w, const ModuleVector& x) {
    if (!w.lambda.is_zero())
        throw std::domain_error(
            "d_apply: requires lambda = 0; reduce via K_n -> K_n - n lambda I first");
    return d_vec(w, x);
}

ModuleVector vir_extend_act(long n, const Weight& w, const ModuleVector& x) {
    if (!w.lambda.is_zero())
        throw std::domain_error(
            "vir_extend_act: requires lambda = 0; reduce via K_n -> K_n - n lambda I first");
    if (n == 0)
        return d_apply(w, x) * GaussianRational(-1);
    return act(AlgebraKind::K, n, w, x) - d_apply(w, x);
}

namespace {

// Enumerates partitions as weakly decreasing positive parts; `current`
// maps to the monomial K_{-p_k} ... K_{-p_1} with parts reversed so the
// stored indices are weakly decreasing.
void collect_partitions(long remaining, long max_part, std::vector<long>& current,
                        std::vector<PBWMonomial>& out, bool exact) {
    if (!exact || remaining == 0) {
        std::vector<long> idx;
        idx.reserve(current.size());
        for (auto it = current.rbegin(); it != current.rend(); ++it)
            idx.push_back(-*it);
        out.emplace_back(std::move(idx));
        if (exact)
            return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        collect_partitions(remaining - part, part, current, out, exact);
        current.pop_back();
    }
}

}  // namespace

std::vector<PBWMonomial> pbw_basis_up_to(long max_degree) {
    std::vector<PBWMonomial> out;
    std::vector<long> current;
    collect_partitions(max_degree, max_degree, current, out, false);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PBWMonomial> pbw_basis_exact(long level) {
    std::vector<PBWMonomial> out;
    std::vector<long> current;
    collect_partitions(level, level, current, out, true);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// beta applied to star(u') x via the module action: push the positive word
// through x, then collapse each remaining monomial m with conj(psi(m*)).
GaussianRational beta_of_starred_product(const Weight& w, const PBWMonomial& u_prime,
                                         const ModuleVector& x) {
    ModuleVector z = x;
    for (long idx : u_prime.indices())
        z = act(AlgebraKind::K, -idx, w, z);
    GaussianRational acc;
    for (const auto& [m, q] : z.terms()) {
        GaussianRational psi_word(1);
        for (long idx : m.indices())
            psi_word *= w.psi(-idx);
        acc += q * psi_word.conj();
    }
    return acc;
}

}  // namespace

GaussianRational gram_pair(const Weight& w, const ModuleVector& x, const ModuleVector& y) {
    GaussianRational acc;
    for (const auto& [u_prime, q] : y.terms())
        acc += q.conj() * beta_of_starred_product(w, u_prime, x);
    return acc;
}

GramResult gram_k_form(const Weight& w, long max_degree, unsigned threads) {
    if (!w.c.is_real())
        throw std::domain_error("gram_k_form: c must be real for the contravariant form");
    GramResult out;
    out.basis = pbw_basis_up_to(max_degree);
    const std::size_t n = out.basis.size();
    out.matrix = Matrix(n, n);
    auto fill_rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out.matrix(i, j) = gram_pair(w, ModuleVector::monomial(out.basis[i]),
                                             ModuleVector::monomial(out.basis[j]));
    };
    if (threads <= 1 || n < 2) {
        fill_rows(0, n);
        return out;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t lo = 0; lo < n; lo += chunk)
        pool.emplace_back(fill_rows, lo, std::min(lo + chunk, n));
    for (auto& t : pool)
        t.join();
    return out;
}

Matrix shapovalov_matrix(const GaussianRational& H, const GaussianRational& c, long level) {
    if (level < 1)
        throw std::domain_error("shapovalov_matrix: level must be >= 1");
    Weight w{H.re(), H.im(), c, GaussianRational()};
    std::vector<PBWMonomial> basis = pbw_basis_exact(level);
    const std::size_t n = basis.size();
    Matrix s(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ModuleVector col = ModuleVector::monomial(basis[j]);
        for (std::size_t i = 0; i < n; ++i) {
            // transpose(u_i) = L_{-n_k} ... L_{-n_1}: apply lowest first.
            ModuleVector z = col;
            const auto& idx = basis[i].indices();
            for (long m : idx)
                z = act(AlgebraKind::Vir, -m, w, z);
            auto it = z.terms().find(PBWMonomial());
            s(i, j) = it == z.terms().end() ? GaussianRational() : it->second;
        }
    }
    return s;
}

GaussianRational ff_phi(long alpha, long beta, const GaussianRational& H,
                        const GaussianRational& c) {
    if (alpha < 1 || beta < 1)
        throw std::domain_error("ff_phi: alpha, beta must be >= 1");
    auto corr = [&](long a) {
        return GaussianRational(Rational(BigInt(a) * a - 1, 24)) * (c - GaussianRational(13));
    };
    GaussianRational cross{Rational(BigInt(alpha) * beta - 1, 2)};
    GaussianRational left = H + corr(alpha) + cross;
    GaussianRational right = H + corr(beta) + cross;
    BigInt diff = BigInt(alpha) * alpha - BigInt(beta) * beta;
    return left * right + GaussianRational(Rational(diff * diff, 16));
}

ReducibilityResult reducibility_test(const Weight& w, long max_level) {
    GaussianRational H = -w.lowest();
    for (long p = 1; p <= max_level; ++p)
        for (long alpha = 1; alpha <= p; ++alpha) {
            if (p % alpha != 0)
                continue;
            long beta = p / alpha;
            if (ff_phi(alpha, beta, H, w.c).is_zero())
                return {true, alpha, beta};
        }
    return {};
}

std::optional<ModuleVector> singular_vector_search(const GaussianRational& H,
                                                   const GaussianRational& c, long level) {
    if (level < 1)
        throw std::domain_error("singular_vector_search: level must be >= 1");
    Weight w{H.re(), H.im(), c, GaussianRational()};
    std::vector<PBWMonomial> basis = pbw_basis_exact(level);
    const std::size_t n = basis.size();

    std::map<PBWMonomial, std::size_t> row_of;
    std::vector<std::vector<GaussianRational>> rows;
    auto add_conditions = [&](long gen) {
        for (std::size_t j = 0; j < n; ++j) {
            ModuleVector img = act(AlgebraKind::Vir, gen, w, ModuleVector::monomial(basis[j]));
            for (const auto& [m, q] : img.terms()) {
                auto [it, inserted] = row_of.try_emplace(m, rows.size());
                if (inserted)
                    rows.emplace_back(n);
                rows[it->second][j] += q;
            }
        }
    };
    add_conditions(1);
    add_conditions(2);

    Matrix a(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = rows[i][j];
    Matrix k = kernel_basis(a);
    if (k.cols() == 0)
        return std::nullopt;
    ModuleVector x;
    for (std::size_t j = 0; j < n; ++j)
        x.add_term(basis[j], k(j, 0));
    return x;
}

std::string format_module_vector(const ModuleVector& x, AlgebraKind kind) {
    if (x.is_zero())
        return "0";
    const std::string sym = is_k_family(kind) ? "K[" : "L[";
    std::string out;
    for (const auto& [m, q] : x.terms()) {
        std::string word;
        for (long idx : m.indices())
            word += sym + std::to_string(idx) + "]";
        word += "v";
        bool negative = q.is_real() && q.re().is_negative();
        GaussianRational mag = negative ? -q : q;
        std::string piece;
        if (mag.is_real() && mag.re() == Rational(1))
            piece = word;
        else if (mag.is_real())
            piece = mag.to_string() + "*" + word;
        else
            piece = "(" + mag.to_string() + ")*" + word;
        if (out.empty())
            out = negative ? "-" + piece : piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace kalg
