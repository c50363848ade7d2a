#include "kalg/morphisms.hpp"

#include "kalg/parse.hpp"

#include <stdexcept>

namespace kalg {

namespace {

LieElement k_gen(long n) { return LieElement::generator(AlgebraKind::K, n); }
LieElement k_central(const GaussianRational& q) {
    return LieElement::central(AlgebraKind::K, q);
}
GaussianRational qi() { return GaussianRational::i(); }
GaussianRational qn(long n) { return GaussianRational(Rational(BigInt(n))); }

// sigma coefficient of K: (n^2+n)/2 alpha + (n^2-n)/2 (conj(alpha) - 1).
GaussianRational sigma_gamma(const GaussianRational& alpha, long n) {
    Rational half_plus(BigInt(n) * n + n, 2);
    Rational half_minus(BigInt(n) * n - n, 2);
    return GaussianRational(half_plus) * alpha +
           GaussianRational(half_minus) * (alpha.conj() - GaussianRational(1));
}

struct Parts {
    LieElement pos{AlgebraKind::K};
    LieElement neg{AlgebraKind::K};
    GaussianRational central;
};

Parts decompose(const LieElement& x) {
    Parts p;
    for (const auto& [n, q] : x.terms())
        (n > 0 ? p.pos : p.neg).add_term(n, q);
    p.central = x.central_coeff();
    return p;
}

}  // namespace

const LieElement& GeneratorMap::image(long n) const {
    auto it = images.find(n);
    if (it == images.end())
        throw std::domain_error("morphism has no image for index " + std::to_string(n));
    return it->second;
}

LieElement apply(const GeneratorMap& m, const LieElement& x) {
    if (!is_k_family(x.kind()))
        throw std::domain_error("apply: expected a K-family element");
    LieElement r(AlgebraKind::K);
    for (const auto& [n, q] : x.terms())
        r = r + m.image(n) * q;
    if (!x.central_coeff().is_zero())
        r = r + m.central_image * x.central_coeff();
    return r;
}

GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second) {
    GeneratorMap out{second.domain, {}, apply(first, second.central_image),
                     first.star_compatible && second.star_compatible, ""};
    for (const auto& [n, img] : second.images)
        out.images.emplace(n, apply(first, img));
    return out;
}

GeneratorMap make_lambda(const GaussianRational& lam, const Window& w) {
    if (!lam.is_real())
        throw std::domain_error("make_lambda: lambda must be real");
    GeneratorMap m{w, {}, k_central(GaussianRational(1)), true, ""};
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        m.images.emplace(n, k_gen(n) + k_central(qi() * qn(n) * lam));
    }
    return m;
}

GeneratorMap make_tau(const Window& w) {
    GeneratorMap m{w, {}, k_central(GaussianRational(-1)), true, ""};
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        m.images.emplace(n, -k_gen(-n));
    }
    return m;
}

GeneratorMap make_delta(long r, const Window& w) {
    if (r == 0)
        throw std::domain_error("make_delta: r must be nonzero");
    // Constant central shift -(C/24)(r - 1/r); forced by the m = -n relation.
    GaussianRational shift{Rational(-(BigInt(r) * r - 1), BigInt(24) * r)};
    GeneratorMap m{w, {}, k_central(qn(r)), true, ""};
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        m.images.emplace(n, k_gen(r * n) * GaussianRational(Rational(BigInt(1), BigInt(r))) +
                                k_central(shift));
    }
    return m;
}

GeneratorMap make_sigma(const GaussianRational& alpha, const LieElement& k_base,
                        const Window& w) {
    if (k_base.kind() != AlgebraKind::K)
        throw std::domain_error("make_sigma: K must be a K-kind element");
    LieElement base = k_base;
    std::string note;
    LieElement defect = bracket(base, star(base)) + base + star(base);
    LieElement k_part = defect;  // defect minus its central part
    GaussianRational kappa = defect.central_coeff();
    k_part = k_part - k_central(kappa);
    if (!k_part.is_zero())
        throw std::domain_error("make_sigma: hypothesis [K,K*] = -K-K* fails; bracket is " +
                                format_element(bracket(base, star(base))));
    if (!kappa.is_zero()) {
        if (!kappa.is_real())
            throw std::domain_error("make_sigma: central defect kappa must be real, got " +
                                    kappa.to_string());
        // [K,K*] = -K-K* + kappa C; K - (kappa/2) C restores the hypothesis.
        GaussianRational eta = -(kappa / GaussianRational(2));
        base = base + k_central(eta);
        note = "normalized K by (" + eta.to_string() + ")*C to absorb kappa = " +
               kappa.to_string();
    }
    GeneratorMap m{w, {}, LieElement::zero(AlgebraKind::K), true, note};
    LieElement base_star = star(base);
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        GaussianRational g = sigma_gamma(alpha, n);
        m.images.emplace(n, base * g + base_star * (g - qn(n)));
    }
    return m;
}

MorphismCheckResult verify_star_morphism(GeneratorMap& m, const Window& w) {
    for (long n = 1; n <= w.bound; ++n) {
        if (!(star(m.image(n)) == m.image(-n)) ) {
            m.star_compatible = false;
            return {false, n, -n};
        }
    }
    if (!(star(m.central_image) == m.central_image)) {
        m.star_compatible = false;
        return {false, 0, 0};
    }
    for (long a = -w.bound; a <= w.bound; ++a) {
        if (a == 0)
            continue;
        for (long b = a + 1; b <= w.bound; ++b) {
            if (b == 0)
                continue;
            long s = a + b;
            if (s != 0 && (s < -w.bound || s > w.bound))
                continue;
            LieElement lhs = apply(m, bracket(k_gen(a), k_gen(b)));
            LieElement rhs = bracket(m.image(a), m.image(b));
            if (!(lhs == rhs)) {
                m.star_compatible = false;
                return {false, a, b};
            }
        }
    }
    m.star_compatible = true;
    return {};
}

SpanWindow kernel_window(const GeneratorMap& m, const Window& w) {
    // Codomain coordinates: every index appearing in an image, plus central.
    std::map<long, std::size_t> codomain;
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        for (const auto& [j, q] : m.image(n).terms())
            codomain.emplace(j, 0);
    }
    std::size_t row_count = 0;
    for (auto& [j, row] : codomain)
        row = row_count++;
    const std::size_t central_row = row_count++;

    const std::size_t n_cols = 2 * static_cast<std::size_t>(w.bound) + 1;
    Matrix a(row_count, n_cols);
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        std::size_t col = k_index_to_col(n, w);
        const LieElement& img = m.image(n);
        for (const auto& [j, q] : img.terms())
            a(codomain[j], col) = q;
        a(central_row, col) = img.central_coeff();
    }
    for (const auto& [j, q] : m.central_image.terms())
        a(codomain.count(j) ? codomain[j] : (throw std::domain_error(
                                                "kernel_window: central image escapes codomain"),
                                            0),
          n_cols - 1) = q;
    a(central_row, n_cols - 1) = m.central_image.central_coeff();

    return span_from_rows(kernel_basis(a).transpose(), w, true);
}

std::string MorphismClass::to_string() const {
    switch (tag) {
        case Tag::LambdaAuto: return "LambdaAuto(lambda=" + lambda.to_string() + ")";
        case Tag::LambdaTau: return "LambdaTau(lambda=" + lambda.to_string() + ")";
        case Tag::SigmaHalfLine: return "SigmaHalfLine(alpha=" + alpha.to_string() + ")";
        case Tag::SigmaGeneric: return "SigmaGeneric(alpha=" + alpha.to_string() + ")";
        case Tag::PositiveType: return "PositiveType(" + std::to_string(n_param) + ")";
        case Tag::NegativeType: return "NegativeType(" + std::to_string(n_param) + ")";
        case Tag::CentralType: return "CentralType(lambda=" + lambda.to_string() + ")";
        case Tag::Invalid: return "Invalid";
        case Tag::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

GaussianRational coeff_sum(const LieElement& x) {
    GaussianRational s;
    for (const auto& [n, q] : x.terms())
        s += q;
    return s;
}

MorphismClass classify_sigma(const GeneratorMap& m, const Parts& p1, const Parts& p2) {
    MorphismClass out;
    out.tag = MorphismClass::Tag::Unknown;
    if (!m.central_image.is_zero())
        return out;

    // Base for the scale extraction: alpha K from the K_1 image when
    // available, otherwise gamma_2 K from the K_2 image (the alpha = 0 case).
    const bool from_k1 = !p1.pos.is_zero();
    const LieElement& b = from_k1 ? p1.pos : p2.pos;
    if (b.is_zero())
        return out;

    // [B, B*] = -conj(s) B - s B* + kappa C when B = s K with the sigma
    // hypothesis on K; read s off the leading coordinates.
    LieElement bb = bracket(b, star(b));
    long lead = b.terms().rbegin()->first;
    GaussianRational u = bb.coeff(lead) / b.coeff(lead);
    GaussianRational v = bb.coeff(-lead) / b.coeff(lead).conj();
    LieElement recon = b * u + star(b) * v + k_central(bb.central_coeff());
    if (!(recon == bb))
        return out;
    GaussianRational s = -v;
    if (s.is_zero() || !(u == -s.conj()))
        return out;

    LieElement k = b * (GaussianRational(1) / s);
    GaussianRational alpha;
    if (from_k1) {
        alpha = s;
    } else {
        // gamma_2 = 3 alpha + conj(alpha) - 1 with alpha = 0 forced by an
        // empty positive part of the K_1 image.
        alpha = GaussianRational(0);
        if (!(s == sigma_gamma(alpha, 2)))
            return out;
    }

    // Validate the whole window against the sigma formula (K-parts exactly;
    // central parts must fit gamma_n eta + (gamma_n - n) conj(eta) for the
    // eta read off the K_1 image).
    LieElement k_star = star(k);
    GaussianRational g1 = sigma_gamma(alpha, 1);
    GaussianRational central1 = m.image(1).central_coeff();
    // g1 eta + (g1 - 1) conj(eta) = central1; solve the 2x2 real system.
    Matrix sys(2, 2), rhs(2, 1);
    GaussianRational c0 = g1 + (g1 - GaussianRational(1));           // coefficient of Re eta
    GaussianRational c1 = (g1 - (g1 - GaussianRational(1))) * qi();  // coefficient of Im eta
    sys(0, 0) = GaussianRational(c0.re());
    sys(0, 1) = GaussianRational(c1.re());
    sys(1, 0) = GaussianRational(c0.im());
    sys(1, 1) = GaussianRational(c1.im());
    rhs(0, 0) = GaussianRational(central1.re());
    rhs(1, 0) = GaussianRational(central1.im());
    SolveResult eta_solve = solve(sys, rhs);
    if (!eta_solve.consistent)
        return out;
    GaussianRational eta(eta_solve.particular(0, 0).re(), eta_solve.particular(1, 0).re());

    for (const auto& [n, img] : m.images) {
        GaussianRational g = sigma_gamma(alpha, n);
        LieElement expected = k * g + k_star * (g - qn(n)) +
                              k_central(g * eta + (g - qn(n)) * eta.conj());
        if (!(expected == img)) {
            out.tag = MorphismClass::Tag::Invalid;
            return out;
        }
    }
    out.tag = alpha.re() == Rational(1, 2) ? MorphismClass::Tag::SigmaHalfLine
                                           : MorphismClass::Tag::SigmaGeneric;
    out.alpha = alpha;
    out.k_base = k + k_central(eta);
    return out;
}

}  // namespace

MorphismClass classify_morphism(const GeneratorMap& m) {
    MorphismClass out;
    if (m.domain.bound < 2 || !m.images.count(1) || !m.images.count(2))
        return out;  // Unknown
    Parts p1 = decompose(m.image(1));
    Parts p2 = decompose(m.image(2));

    const bool has_pos = !p1.pos.is_zero() || !p2.pos.is_zero();
    const bool has_neg = !p1.neg.is_zero() || !p2.neg.is_zero();

    if (!has_pos && !has_neg) {
        // rho(K_n) = i n lambda C.
        GaussianRational lambda = p1.central * (-qi());
        if (!lambda.is_real()) {
            out.tag = MorphismClass::Tag::Invalid;
            return out;
        }
        for (const auto& [n, img] : m.images)
            if (!(img == k_central(qi() * qn(n) * lambda))) {
                out.tag = MorphismClass::Tag::Invalid;
                return out;
            }
        out.tag = MorphismClass::Tag::CentralType;
        out.lambda = lambda;
        return out;
    }

    if (has_pos && has_neg)
        return classify_sigma(m, p1, p2);

    if (has_pos) {
        // Bijective normal form first: rho(K_n) = K_n + i n lambda C.
        GaussianRational lambda = p1.central * (-qi());
        if (lambda.is_real()) {
            bool is_lambda_auto = true;
            for (const auto& [n, img] : m.images)
                if (!(img == k_gen(n) + k_central(qi() * qn(n) * lambda))) {
                    is_lambda_auto = false;
                    break;
                }
            if (is_lambda_auto) {
                out.tag = MorphismClass::Tag::LambdaAuto;
                out.lambda = lambda;
                return out;
            }
        }
        if (p1.pos.is_zero() || p2.pos.is_zero()) {
            out.tag = MorphismClass::Tag::Invalid;
            return out;
        }
        long n_max = p1.pos.terms().rbegin()->first;
        GaussianRational inv_n{Rational(BigInt(1), BigInt(n_max))};
        if (p2.pos.terms().rbegin()->first != 2 * n_max || !(coeff_sum(p1.pos) == inv_n) ||
            !(coeff_sum(p2.pos) == inv_n)) {
            out.tag = MorphismClass::Tag::Invalid;
            return out;
        }
        out.tag = MorphismClass::Tag::PositiveType;
        out.n_param = n_max;
        return out;
    }

    // Negative-only support: Lambda∘tau normal form, else NegativeType.
    GaussianRational lambda = p1.central * (-qi());
    if (lambda.is_real()) {
        bool is_lambda_tau = true;
        for (const auto& [n, img] : m.images)
            if (!(img == -k_gen(-n) + k_central(qi() * qn(n) * lambda))) {
                is_lambda_tau = false;
                break;
            }
        if (is_lambda_tau) {
            out.tag = MorphismClass::Tag::LambdaTau;
            out.lambda = lambda;
            return out;
        }
    }
    if (p1.neg.is_zero() || p2.neg.is_zero()) {
        out.tag = MorphismClass::Tag::Invalid;
        return out;
    }
    long n_min = p1.neg.terms().begin()->first;
    GaussianRational inv_n{Rational(BigInt(1), BigInt(n_min))};  // = -1/|n_min|
    if (p2.neg.terms().begin()->first != 2 * n_min || !(coeff_sum(p1.neg) == inv_n) ||
        !(coeff_sum(p2.neg) == inv_n)) {
        out.tag = MorphismClass::Tag::Invalid;
        return out;
    }
    out.tag = MorphismClass::Tag::NegativeType;
    out.n_param = -n_min;
    return out;
}

L0ExtensionResult l0_extension_solve(const GeneratorMap& m, const Window& w) {
    if (w.bound < 3)
        throw std::domain_error("l0_extension_solve: window must be >= 3");

    // Real unknowns: Re/Im of a_0 and b, then Re/Im of a_n per window index.
    std::vector<long> indices;
    for (long n = -w.bound; n <= w.bound; ++n)
        if (n != 0)
            indices.push_back(n);
    const std::size_t vars = 4 + 2 * indices.size();
    auto re_var = [&](std::size_t k) { return 4 + 2 * k; };
    auto im_var = [&](std::size_t k) { return 5 + 2 * k; };

    // X = sum_v u_v * basis[v] as Vir elements.
    std::vector<LieElement> basis(vars, LieElement(AlgebraKind::Vir));
    basis[0] = LieElement::generator(AlgebraKind::Vir, 0);
    basis[1] = basis[0] * qi();
    basis[2] = LieElement::central(AlgebraKind::Vir, GaussianRational(1));
    basis[3] = basis[2] * qi();
    for (std::size_t k = 0; k < indices.size(); ++k) {
        basis[re_var(k)] = embed_in_vir(LieElement::generator(AlgebraKind::K, indices[k]));
        basis[im_var(k)] = basis[re_var(k)] * qi();
    }

    struct Row {
        std::vector<GaussianRational> coeffs;
        GaussianRational rhs;
    };
    std::vector<Row> rows;
    auto add_complex_equation = [&](const std::vector<GaussianRational>& coeffs,
                                    const GaussianRational& constant) {
        // coeffs . u + constant = 0, u real => two real rows.
        Row re_row{std::vector<GaussianRational>(vars), GaussianRational(-constant.re())};
        Row im_row{std::vector<GaussianRational>(vars), GaussianRational(-constant.im())};
        for (std::size_t v = 0; v < vars; ++v) {
            re_row.coeffs[v] = GaussianRational(coeffs[v].re());
            im_row.coeffs[v] = GaussianRational(coeffs[v].im());
        }
        rows.push_back(std::move(re_row));
        rows.push_back(std::move(im_row));
    };

    for (long j : {1L, -1L, 2L, -2L}) {
        LieElement img = embed_in_vir(m.image(j));
        // j*img + j*X - [img, X] = 0.
        LieElement constant = img * qn(j);
        std::vector<LieElement> var_coeff;
        var_coeff.reserve(vars);
        for (std::size_t v = 0; v < vars; ++v)
            var_coeff.push_back(basis[v] * qn(j) - bracket(img, basis[v]));

        // Collect every L-coordinate touched by the equation.
        std::set<long> coords;
        for (const auto& [n, q] : constant.terms())
            coords.insert(n);
        for (const auto& e : var_coeff)
            for (const auto& [n, q] : e.terms())
                coords.insert(n);
        for (long n : coords) {
            std::vector<GaussianRational> coeffs(vars);
            for (std::size_t v = 0; v < vars; ++v)
                coeffs[v] = var_coeff[v].coeff(n);
            add_complex_equation(coeffs, constant.coeff(n));
        }
        std::vector<GaussianRational> coeffs(vars);
        for (std::size_t v = 0; v < vars; ++v)
            coeffs[v] = var_coeff[v].central_coeff();
        add_complex_equation(coeffs, constant.central_coeff());
    }

    // Self-adjointness: a_0, b real and a_{-n} = conj(a_n).
    auto add_real_row = [&](std::vector<std::pair<std::size_t, int>> entries) {
        Row r{std::vector<GaussianRational>(vars), GaussianRational()};
        for (auto [v, s] : entries)
            r.coeffs[v] = GaussianRational(s);
        rows.push_back(std::move(r));
    };
    add_real_row({{1, 1}});
    add_real_row({{3, 1}});
    std::map<long, std::size_t> index_pos;
    for (std::size_t k = 0; k < indices.size(); ++k)
        index_pos[indices[k]] = k;
    for (long n = 1; n <= w.bound; ++n) {
        add_real_row({{re_var(index_pos[-n]), 1}, {re_var(index_pos[n]), -1}});
        add_real_row({{im_var(index_pos[-n]), 1}, {im_var(index_pos[n]), 1}});
    }

    Matrix a(rows.size(), vars), rhs(rows.size(), 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t v = 0; v < vars; ++v)
            a(i, v) = rows[i].coeffs[v];
        rhs(i, 0) = rows[i].rhs;
    }
    SolveResult sol = solve(a, rhs);

    L0ExtensionResult out;
    if (!sol.consistent) {
        out.feasible = false;
        out.witness = "reduced row " + std::to_string(sol.witness_row) +
                      " of the constraint system reads 0 = 1: no self-adjoint extension of L_0 "
                      "exists";
        return out;
    }
    out.feasible = true;
    auto value = [&](std::size_t re_v, std::size_t im_v) {
        return GaussianRational(sol.particular(re_v, 0).re(), sol.particular(im_v, 0).re());
    };
    out.a0 = value(0, 1);
    out.b = value(2, 3);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        GaussianRational an = value(re_var(k), im_var(k));
        if (!an.is_zero())
            out.a[indices[k]] = an;
    }
    return out;
}

}  // namespace kalg
