#include "kalg/cohomology.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kalg {

namespace {

GaussianRational central_weight(long m) {
    BigInt mm(m);
    return GaussianRational(Rational(mm * (mm * mm - 1), 12));
}

void require_valid_pair(long m, long n, const Window& w) {
    if (m == n)
        throw std::domain_error("cocycle entry needs distinct indices");
    if (!w.contains_k_index(m) || !w.contains_k_index(n))
        throw std::domain_error("cocycle entry outside window");
}

}  // namespace

void Cocycle::set(long m, long n, const GaussianRational& v) {
    require_valid_pair(m, n, window_);
    auto key = m < n ? std::make_pair(m, n) : std::make_pair(n, m);
    GaussianRational stored = m < n ? v : -v;
    undefined_.erase(key);
    if (stored.is_zero())
        table_.erase(key);
    else
        table_[key] = stored;
}

void Cocycle::mark_undefined(long m, long n) {
    require_valid_pair(m, n, window_);
    auto key = m < n ? std::make_pair(m, n) : std::make_pair(n, m);
    table_.erase(key);
    undefined_.insert(key);
}

std::optional<GaussianRational> Cocycle::value(long m, long n) const {
    if (m == 0 || n == 0)
        return GaussianRational();  // w_{k,0} = w_{0,k} = 0 by convention
    if (m == n)
        return GaussianRational();
    auto key = m < n ? std::make_pair(m, n) : std::make_pair(n, m);
    if (undefined_.count(key))
        return std::nullopt;
    auto it = table_.find(key);
    GaussianRational v = it == table_.end() ? GaussianRational() : it->second;
    return m < n ? v : -v;
}

Cocycle Cocycle::virasoro(Window w) {
    Cocycle c(w);
    for (long m = 2; m <= w.bound; ++m)
        c.set(m, -m, central_weight(m));
    return c;
}

Cocycle Cocycle::load(std::istream& in, Window w) {
    Cocycle c(w);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long m, n;
        std::string re, im;
        if (!(ls >> m))
            continue;  // blank line
        if (!(ls >> n >> re >> im))
            throw std::invalid_argument("cocycle file line " + std::to_string(lineno) +
                                        ": expected 'm n re im'");
        if (m >= n)
            throw std::invalid_argument("cocycle file line " + std::to_string(lineno) +
                                        ": entries require m < n");
        c.set(m, n, GaussianRational(Rational::from_string(re), Rational::from_string(im)));
    }
    return c;
}

void Cocycle::save(std::ostream& out) const {
    for (const auto& [key, v] : table_)
        out << key.first << ' ' << key.second << ' ' << v.re().to_string() << ' '
            << v.im().to_string() << '\n';
}

Cocycle cocycle_add(const Cocycle& a, const Cocycle& b) {
    if (a.window().bound != b.window().bound)
        throw std::invalid_argument("cocycle_add: window mismatch");
    Cocycle out(a.window());
    const long bound = a.window().bound;
    for (long m = -bound; m <= bound; ++m) {
        if (m == 0)
            continue;
        for (long n = m + 1; n <= bound; ++n) {
            if (n == 0)
                continue;
            auto x = a.value(m, n);
            auto y = b.value(m, n);
            if (x && y)
                out.set(m, n, *x + *y);
            else
                out.mark_undefined(m, n);
        }
    }
    return out;
}

Cocycle cocycle_scale(const Cocycle& w, const GaussianRational& q) {
    Cocycle out(w.window());
    for (const auto& [key, v] : w.entries())
        out.set(key.first, key.second, v * q);
    for (const auto& key : w.undefined())
        out.mark_undefined(key.first, key.second);
    return out;
}

CocycleCheckResult cocycle_check(const Cocycle& w) {
    const long bound = w.window().bound;
    std::vector<long> idx;
    for (long n = -bound; n <= bound; ++n)
        if (n != 0)
            idx.push_back(n);

    auto representable = [&](long s) { return s == 0 || (-bound <= s && s <= bound); };

    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            for (std::size_t c = b + 1; c < idx.size(); ++c) {
                long l = idx[a], m = idx[b], n = idx[c];
                if (!representable(l + m) || !representable(m + n) || !representable(n + l))
                    continue;
                auto terms = {w.value(l, m + n), w.value(l, m), w.value(l, n),
                              w.value(n, l + m), w.value(n, l), w.value(n, m),
                              w.value(m, n + l), w.value(m, n), w.value(m, l)};
                bool defined = true;
                for (const auto& t : terms)
                    defined = defined && t.has_value();
                if (!defined)
                    continue;
                auto q = [](long v) { return GaussianRational(Rational(BigInt(v))); };
                GaussianRational sum = q(m - n) * *w.value(l, m + n) - q(m) * *w.value(l, m) +
                                       q(n) * *w.value(l, n) + q(l - m) * *w.value(n, l + m) -
                                       q(l) * *w.value(n, l) + q(m) * *w.value(n, m) +
                                       q(n - l) * *w.value(m, n + l) - q(n) * *w.value(m, n) +
                                       q(l) * *w.value(m, l);
                if (!sum.is_zero())
                    return {false, {l, m, n}};
            }
    return {};
}

namespace {

LieElement k_gen(long n) { return LieElement::generator(AlgebraKind::K0, n); }

std::string bracket_label(long a, long b) {
    return "[K_" + std::to_string(a) + ",K_" + std::to_string(b) + "]";
}

}  // namespace

CommutatorBasis commutator_basis(const Window& w) {
    if (w.bound < 3)
        throw std::domain_error(
            "commutator_basis: window must be >= 3 ([K_2,K_1] already reaches index 3)");
    CommutatorBasis basis{w, {}};
    for (long n = 2; n < w.bound; ++n)
        basis.elements.emplace_back(bracket_label(n, 1), bracket(k_gen(n), k_gen(1)));
    for (long n = 2; n < w.bound; ++n)
        basis.elements.emplace_back(bracket_label(-n, -1), bracket(k_gen(-n), k_gen(-1)));
    basis.elements.emplace_back(bracket_label(-2, 1), bracket(k_gen(-2), k_gen(1)));
    basis.elements.emplace_back(bracket_label(2, -1), bracket(k_gen(2), k_gen(-1)));
    basis.elements.emplace_back(bracket_label(1, -1), bracket(k_gen(1), k_gen(-1)));

    std::vector<LieElement> elems;
    for (const auto& [label, e] : basis.elements)
        elems.push_back(e);
    if (span_from_elements(elems, w, false).rank() != basis.elements.size())
        throw std::domain_error("commutator_basis: elements are not independent");
    return basis;
}

Cocycle coboundary_from_mu(const std::map<long, GaussianRational>& mu, const Window& w) {
    Cocycle c(w);
    auto mu_at = [&](long j) {
        auto it = mu.find(j);
        return it == mu.end() ? GaussianRational() : it->second;
    };
    for (long m = -w.bound; m <= w.bound; ++m) {
        if (m == 0)
            continue;
        for (long n = m + 1; n <= w.bound; ++n) {
            if (n == 0)
                continue;
            LieElement b = bracket(k_gen(m), k_gen(n));
            bool inside = true;
            GaussianRational v;
            for (const auto& [j, q] : b.terms()) {
                if (!w.contains_k_index(j)) {
                    inside = false;
                    break;
                }
                v += q * mu_at(j);
            }
            if (inside)
                c.set(m, n, v);
            else
                c.mark_undefined(m, n);
        }
    }
    return c;
}

ReduceResult reduce_cocycle(const Cocycle& w) {
    const Window& win = w.window();
    const long bound = win.bound;
    if (bound < 5)
        throw std::domain_error("reduce_cocycle: window must be >= 5 (t is read at (2,-2) with "
                                "interior margin 3)");
    if (auto check = cocycle_check(w); !check.ok)
        throw std::domain_error("reduce_cocycle: not a cocycle (identity fails at triple (" +
                                std::to_string(check.violating[0]) + "," +
                                std::to_string(check.violating[1]) + "," +
                                std::to_string(check.violating[2]) + "))");

    // alpha on the commutator basis from the designated entries.
    CommutatorBasis basis = commutator_basis(win);
    Matrix rows(basis.elements.size(), 2 * static_cast<std::size_t>(bound));
    Matrix alpha(basis.elements.size(), 1);
    std::size_t i = 0;
    auto designated = [&](long a, long b) {
        auto v = w.value(a, b);
        if (!v)
            throw std::domain_error("reduce_cocycle: designated entry (" + std::to_string(a) +
                                    "," + std::to_string(b) + ") is undefined");
        return *v;
    };
    for (long n = 2; n < bound; ++n)
        alpha(i++, 0) = designated(n, 1);
    for (long n = 2; n < bound; ++n)
        alpha(i++, 0) = designated(-n, -1);
    alpha(i++, 0) = designated(-2, 1);
    alpha(i++, 0) = designated(2, -1);
    alpha(i++, 0) = designated(1, -1);
    for (std::size_t r = 0; r < basis.elements.size(); ++r) {
        Matrix row = element_to_row(basis.elements[r].second, win, false);
        for (std::size_t c = 0; c < row.cols(); ++c)
            rows(r, c) = row(0, c);
    }
    SolveResult mu_solve = solve(rows, alpha);
    if (!mu_solve.consistent)
        throw std::domain_error("reduce_cocycle: alpha is not realizable (not a cocycle)");

    ReduceResult out{{}, GaussianRational(), Cocycle(win)};
    for (std::size_t c = 0; c < rows.cols(); ++c)
        if (!mu_solve.particular(c, 0).is_zero())
            out.mu[col_to_k_index(c, win)] = mu_solve.particular(c, 0);

    Cocycle cob = coboundary_from_mu(out.mu, win);
    for (long m = -bound; m <= bound; ++m) {
        if (m == 0)
            continue;
        for (long n = m + 1; n <= bound; ++n) {
            if (n == 0)
                continue;
            auto a = w.value(m, n);
            auto b = cob.value(m, n);
            if (a && b)
                out.residual.set(m, n, *a - *b);
            else
                out.residual.mark_undefined(m, n);
        }
    }

    const long interior = bound - 3;
    out.t = *out.residual.value(2, -2) * GaussianRational(2);
    for (long m = -interior; m <= interior; ++m) {
        if (m == 0)
            continue;
        for (long n = m + 1; n <= interior; ++n) {
            if (n == 0 || std::labs(m + n) > interior)
                continue;
            GaussianRational r = *out.residual.value(m, n);
            GaussianRational expected =
                (m == -n) ? -(out.t * central_weight(n)) : GaussianRational();
            if (!(r == expected)) {
                // Distinguish bad input from truncation artifacts.
                if (!cocycle_check(w).ok)
                    throw std::domain_error("reduce_cocycle: not a cocycle");
                throw std::domain_error(
                    "reduce_cocycle: window too small (interior residual at (" +
                    std::to_string(m) + "," + std::to_string(n) + ") is " + r.to_string() +
                    ", expected " + expected.to_string() + ")");
            }
        }
    }
    return out;
}

}  // namespace kalg
