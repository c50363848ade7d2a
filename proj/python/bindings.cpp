#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kalg/cohomology.hpp"
#include "kalg/ideals.hpp"
#include "kalg/jets.hpp"
#include "kalg/morphisms.hpp"
#include "kalg/parse.hpp"
#include "kalg/verma.hpp"

#include <optional>

namespace py = pybind11;
using namespace kalg;

namespace {

// Exact scalars cross the boundary as strings so nothing is rounded.

std::optional<AlgebraKind> hint(const std::string& algebra) {
    if (algebra.empty())
        return std::nullopt;
    if (algebra == "k")
        return AlgebraKind::K;
    if (algebra == "k0")
        return AlgebraKind::K0;
    if (algebra == "vir")
        return AlgebraKind::Vir;
    if (algebra == "witt")
        return AlgebraKind::Witt;
    throw std::invalid_argument("algebra must be one of k, k0, vir, witt");
}

LieElement parse(const std::string& text, const std::string& algebra) {
    return parse_element(text, hint(algebra));
}

GaussianRational gq(const std::string& s) { return GaussianRational::from_string(s); }
Rational rat(const std::string& s) { return Rational::from_string(s); }

Weight weight(const std::string& h, const std::string& hp, const std::string& c,
              const std::string& lam) {
    return Weight{rat(h), rat(hp), gq(c), gq(lam)};
}

std::vector<std::vector<std::string>> matrix_to_strings(const Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i].push_back(m(i, j).to_string());
    }
    return rows;
}

GeneratorMap build_morphism(const std::map<long, std::string>& images,
                            const std::string& central, long window) {
    Window w(window);
    GeneratorMap m{w, {}, parse_element(central, AlgebraKind::K), false, ""};
    for (const auto& [n, text] : images)
        m.images.emplace(n, parse_element(text, AlgebraKind::K));
    for (long n = 1; n <= w.bound; ++n) {
        if (m.images.count(n) && !m.images.count(-n))
            m.images.emplace(-n, star(m.images.at(n)));
        if (m.images.count(-n) && !m.images.count(n))
            m.images.emplace(n, star(m.images.at(-n)));
        if (!m.images.count(n))
            throw std::domain_error("no image for K[" + std::to_string(n) + "]");
    }
    return m;
}

std::string functional_to_string(const std::map<long, GaussianRational>& mu) {
    LieElement x(AlgebraKind::K0);
    for (const auto& [n, q] : mu)
        x.add_term(n, q);
    return format_element(x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computer algebra for the stabilizer subalgebra K of the Virasoro "
              "algebra at the point at infinity. Exact scalars are passed as strings "
              "in the a/b+c/di textual form; elements use the K[n]/L[n]/C grammar.";

    m.def(
        "bracket",
        [](const std::string& x, const std::string& y, const std::string& algebra) {
            LieElement xe = parse(x, algebra);
            return format_element(bracket(xe, parse_element(y, xe.kind())));
        },
        py::arg("x"), py::arg("y"), py::arg("algebra") = "");

    m.def(
        "star",
        [](const std::string& x, const std::string& algebra) {
            return format_element(star(parse(x, algebra)));
        },
        py::arg("x"), py::arg("algebra") = "");

    m.def(
        "phi",
        [](long k, const std::string& x) {
            LieElement e = parse_element(x);
            return (k == 0 ? phi_0(e) : phi_k(k, e)).to_string();
        },
        py::arg("k"), py::arg("x"));

    m.def(
        "mbasis", [](long k, long n) { return format_element(m_basis(k, n)); }, py::arg("k"),
        py::arg("n"));

    m.def(
        "embed_in_vir",
        [](const std::string& x, const std::string& algebra) {
            return format_element(embed_in_vir(parse(x, algebra.empty() ? "k" : algebra)));
        },
        py::arg("x"), py::arg("algebra") = "");

    m.def(
        "project_to_k",
        [](const std::string& x) { return format_element(project_to_k(parse_element(x))); },
        py::arg("x"));

    m.def(
        "vanishing_order",
        [](const std::string& x) -> std::optional<long> {
            return vanishing_order(parse_element(x, AlgebraKind::K0));
        },
        py::arg("x"), "Largest k with phi_1..phi_k all zero; None for the zero element.");

    m.def(
        "ideal_closure",
        [](const std::vector<std::string>& generators, long window) {
            Window w(window);
            std::vector<LieElement> gens;
            for (const std::string& g : generators)
                gens.push_back(parse_element(g, AlgebraKind::K0));
            SpanWindow span = ideal_closure_window(gens, w);
            std::vector<std::string> basis;
            for (std::size_t r = 0; r < span.rank(); ++r)
                basis.push_back(
                    format_element(row_to_element(span.rows, r, w, AlgebraKind::K0, false)));
            py::dict out;
            out["rank"] = span.rank();
            out["basis"] = basis;
            return out;
        },
        py::arg("generators"), py::arg("window"));

    m.def(
        "classify_ideal",
        [](const std::vector<std::string>& generators, long window) {
            Window w(window);
            std::vector<LieElement> gens;
            for (const std::string& g : generators)
                gens.push_back(parse_element(g, AlgebraKind::K0));
            return classify_ideal_window(ideal_closure_window(gens, w)).to_string();
        },
        py::arg("generators"), py::arg("window"));

    m.def(
        "cocycle_reduce",
        [](const std::vector<std::tuple<long, long, std::string, std::string>>& entries,
           long window) {
            Cocycle c{Window(window)};
            for (const auto& [a, b, re, im] : entries)
                c.set(a, b, GaussianRational(rat(re), rat(im)));
            ReduceResult r = reduce_cocycle(c);
            py::dict out;
            out["t"] = r.t.to_string();
            out["coboundary"] = functional_to_string(r.mu);
            return out;
        },
        py::arg("entries"), py::arg("window"),
        "entries: (m, n, re, im) tuples with m < n; returns the Virasoro coefficient t and "
        "the coboundary functional.");

    m.def(
        "verify_morphism",
        [](const std::map<long, std::string>& images, const std::string& central, long window) {
            GeneratorMap gm = build_morphism(images, central, window);
            MorphismCheckResult r = verify_star_morphism(gm, Window(window));
            py::dict out;
            out["valid"] = r.ok;
            if (!r.ok)
                out["first_violation"] = py::make_tuple(r.first_a, r.first_b);
            return out;
        },
        py::arg("images"), py::arg("central") = "C", py::arg("window") = 8);

    m.def(
        "classify_morphism",
        [](const std::map<long, std::string>& images, const std::string& central, long window) {
            GeneratorMap gm = build_morphism(images, central, window);
            return classify_morphism(gm).to_string();
        },
        py::arg("images"), py::arg("central") = "C", py::arg("window") = 8);

    m.def(
        "l0_extend",
        [](const std::string& lam, long window) {
            Window w(window);
            L0ExtensionResult r = l0_extension_solve(make_lambda(gq(lam), w), w);
            py::dict out;
            out["feasible"] = r.feasible;
            if (r.feasible) {
                out["a0"] = r.a0.to_string();
                out["b"] = r.b.to_string();
                out["a"] = functional_to_string(r.a);
            } else {
                out["witness"] = r.witness;
            }
            return out;
        },
        py::arg("lam"), py::arg("window") = 6);

    m.def(
        "gram",
        [](const std::string& h, const std::string& hp, const std::string& c,
           const std::string& lam, long maxdeg, unsigned threads) {
            GramResult g = gram_k_form(weight(h, hp, c, lam), maxdeg, threads);
            std::vector<std::string> labels;
            for (const PBWMonomial& mm : g.basis)
                labels.push_back(format_module_vector(ModuleVector::monomial(mm), AlgebraKind::K));
            py::dict out;
            out["monomials"] = labels;
            out["matrix"] = matrix_to_strings(g.matrix);
            return out;
        },
        py::arg("h") = "0", py::arg("hp") = "0", py::arg("c") = "0", py::arg("lam") = "0",
        py::arg("maxdeg") = 2, py::arg("threads") = 1);

    m.def(
        "shapovalov",
        [](const std::string& H, const std::string& c, long level) {
            return matrix_to_strings(shapovalov_matrix(gq(H), gq(c), level));
        },
        py::arg("H"), py::arg("c"), py::arg("level"));

    m.def(
        "kac_det",
        [](const std::string& H, const std::string& c, long level) {
            return det(shapovalov_matrix(gq(H), gq(c), level)).to_string();
        },
        py::arg("H"), py::arg("c"), py::arg("level"));

    m.def(
        "ff_phi",
        [](long alpha, long beta, const std::string& H, const std::string& c) {
            return ff_phi(alpha, beta, gq(H), gq(c)).to_string();
        },
        py::arg("alpha"), py::arg("beta"), py::arg("H"), py::arg("c"));

    m.def(
        "reducible",
        [](const std::string& h, const std::string& hp, const std::string& c,
           const std::string& lam, long max_level) -> std::optional<std::pair<long, long>> {
            ReducibilityResult r = reducibility_test(weight(h, hp, c, lam), max_level);
            if (!r.reducible)
                return std::nullopt;
            return std::make_pair(r.alpha, r.beta);
        },
        py::arg("h") = "0", py::arg("hp") = "0", py::arg("c") = "0", py::arg("lam") = "0",
        py::arg("max_level") = 4,
        "The (alpha, beta) witness when V_{h+ih',c,lambda} is reducible, else None.");

    m.def(
        "singular_vector",
        [](const std::string& H, const std::string& c, long level) -> std::optional<std::string> {
            auto v = singular_vector_search(gq(H), gq(c), level);
            if (!v)
                return std::nullopt;
            return format_module_vector(*v, AlgebraKind::Vir);
        },
        py::arg("H"), py::arg("c"), py::arg("level"));

    m.def(
        "jet_compose",
        [](const std::pair<std::string, std::string>& a,
           const std::pair<std::string, std::string>& b) {
            Jet2Group g = jet_compose(Jet2Group(rat(a.first), rat(a.second)),
                                      Jet2Group(rat(b.first), rat(b.second)));
            return std::make_pair(g.x1.to_string(), g.x2.to_string());
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "jet_inverse",
        [](const std::pair<std::string, std::string>& a) {
            Jet2Group g = jet_inverse(Jet2Group(rat(a.first), rat(a.second)));
            return std::make_pair(g.x1.to_string(), g.x2.to_string());
        },
        py::arg("a"));

    m.def(
        "jet_bracket",
        [](const std::pair<std::string, std::string>& a,
           const std::pair<std::string, std::string>& b) {
            Jet2Algebra g = jet_bracket(Jet2Algebra{rat(a.first), rat(a.second)},
                                        Jet2Algebra{rat(b.first), rat(b.second)});
            return std::make_pair(g.x1.to_string(), g.x2.to_string());
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "jet_exp",
        [](const std::string& x1, const std::string& x2, const std::string& s) {
            Jet2GroupF g = jet_exp(Jet2Algebra{rat(x1), rat(x2)}, rat(s));
            return std::make_pair(g.x1, g.x2);
        },
        py::arg("x1"), py::arg("x2"), py::arg("s"));

    m.def(
        "chi_lambda",
        [](const std::string& lam, const std::string& x1) {
            return chi_lambda(rat(lam), rat(x1).to_double());
        },
        py::arg("lam"), py::arg("x1"));

    m.def(
        "jet_of_field",
        [](const std::string& x) {
            Jet2Algebra a = jet_of_field(to_fourier(parse_element(x, AlgebraKind::K0)));
            return std::make_pair(a.x1.to_string(), a.x2.to_string());
        },
        py::arg("x"),
        "Exact 2-jet (f'(0), f''(0)) of the field of an anti-selfadjoint K0 element.");
}
