#include "CLI11.hpp"
#include "json.hpp"

#include "kalg/cohomology.hpp"
#include "kalg/ideals.hpp"
#include "kalg/jets.hpp"
#include "kalg/morphisms.hpp"
#include "kalg/parse.hpp"
#include "kalg/verma.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace kalg;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    unsigned threads = 1;
    long window = 0;
    long level = 0;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

void emit(const Options& opt, const std::string& text, const json& j) {
    if (json_mode(opt))
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

Window require_window(const Options& opt, long fallback = 0) {
    long b = opt.window > 0 ? opt.window : fallback;
    if (b < 1)
        throw CLI::ValidationError("--window", "a positive --window is required");
    return Window(b);
}

std::optional<AlgebraKind> algebra_hint(const std::string& name) {
    if (name.empty())
        return std::nullopt;
    if (name == "k")
        return AlgebraKind::K;
    if (name == "k0")
        return AlgebraKind::K0;
    if (name == "vir")
        return AlgebraKind::Vir;
    if (name == "witt")
        return AlgebraKind::Witt;
    throw CLI::ValidationError("--algebra", "expected one of k, k0, vir, witt");
}

// Functional tables (mu of the cocycle reduction) print like elements over
// the dual coefficients.
std::string format_functional(const std::map<long, GaussianRational>& mu) {
    LieElement x(AlgebraKind::K0);
    for (const auto& [n, q] : mu)
        x.add_term(n, q);
    return format_element(x);
}

GeneratorMap load_morphism(const std::string& path, const Window& w) {
    std::ifstream in(path);
    if (!in)
        throw std::domain_error("cannot open morphism file: " + path);
    GeneratorMap m{w, {}, LieElement::zero(AlgebraKind::K), false, ""};
    std::string line;
    std::size_t lineno = 0;
    bool central_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw std::domain_error("morphism file line " + std::to_string(lineno) +
                                    ": expected 'K[n] -> element' or 'C -> element'");
        std::string lhs = line.substr(0, arrow);
        lhs.erase(remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
        LieElement image = parse_element(line.substr(arrow + 2), AlgebraKind::K);
        if (lhs == "C") {
            m.central_image = image;
            central_seen = true;
        } else if (lhs.size() > 3 && lhs.rfind("K[", 0) == 0 && lhs.back() == ']') {
            long n = std::stol(lhs.substr(2, lhs.size() - 3));
            if (n == 0)
                throw std::domain_error("morphism file line " + std::to_string(lineno) +
                                        ": index 0 not in K basis");
            m.images.insert_or_assign(n, image);
        } else {
            throw std::domain_error("morphism file line " + std::to_string(lineno) +
                                    ": bad left-hand side '" + lhs + "'");
        }
    }
    if (!central_seen)
        throw std::domain_error("morphism file: missing 'C -> ...' line");
    // Star-compatible fill for indices given on one side only.
    for (long n = 1; n <= w.bound; ++n) {
        if (m.images.count(n) && !m.images.count(-n))
            m.images.emplace(-n, star(m.images.at(n)));
        if (m.images.count(-n) && !m.images.count(n))
            m.images.emplace(n, star(m.images.at(-n)));
        if (!m.images.count(n))
            throw std::domain_error("morphism file: no image for K[" + std::to_string(n) +
                                    "] inside the window");
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m(i, j).to_string();
        out << "\n";
    }
    std::string s = out.str();
    if (!s.empty())
        s.pop_back();
    return s;
}

std::string monomial_label(const PBWMonomial& m, AlgebraKind kind) {
    return format_module_vector(ModuleVector::monomial(m), kind);
}

double to_double(const std::string& s) { return GaussianRational::from_string(s).re().to_double(); }

std::string fmt_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for the stabilizer subalgebra K of the Virasoro "
                 "algebra at the point at infinity"};
    app.set_help_flag("--help", "Print help");
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "Worker threads for matrix fills");
    app.add_option("--window", opt.window, "Index window bound");
    app.add_option("--level", opt.level, "Module level");

    std::string arg_x, arg_y, arg_algebra, arg_file;
    std::string arg_h = "0", arg_hp = "0", arg_c = "0", arg_lambda = "0", arg_big_h = "0";
    std::string arg_s = "0", arg_x1 = "1", arg_x2 = "0", arg_y1 = "1", arg_y2 = "0";
    long arg_k = 0, arg_n = 0, arg_maxdeg = 2, arg_maxlevel = 4;
    std::vector<std::string> arg_generators;

    auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
    cmd_bracket->add_option("x", arg_x)->required();
    cmd_bracket->add_option("y", arg_y)->required();
    cmd_bracket->add_option("--algebra", arg_algebra, "Force the algebra: k, k0, vir, witt");

    auto* cmd_star = app.add_subcommand("star", "The *-operation");
    cmd_star->add_option("x", arg_x)->required();
    cmd_star->add_option("--algebra", arg_algebra);

    auto* cmd_phi = app.add_subcommand("phi", "Jet functional phi_k");
    cmd_phi->add_option("--k", arg_k)->required();
    cmd_phi->add_option("x", arg_x)->required();

    auto* cmd_mbasis = app.add_subcommand("mbasis", "Iterated-difference basis element M^k_n");
    cmd_mbasis->add_option("--k", arg_k)->required();
    cmd_mbasis->add_option("--n", arg_n)->required();

    auto* cmd_closure = app.add_subcommand("ideal-closure", "Window ideal closure of generators");
    cmd_closure->add_option("generators", arg_generators)->required();

    auto* cmd_classify_ideal =
        app.add_subcommand("classify-ideal", "Classify the window ideal closure");
    cmd_classify_ideal->add_option("generators", arg_generators)->required();

    auto* cmd_reduce = app.add_subcommand("cocycle-reduce", "H^2 reduction of a 2-cocycle");
    cmd_reduce->add_option("file", arg_file)->required();

    auto* cmd_mcheck = app.add_subcommand("morphism-check", "Verify a generator map");
    cmd_mcheck->add_option("file", arg_file)->required();

    auto* cmd_mclass = app.add_subcommand("morphism-classify", "Classify a generator map");
    cmd_mclass->add_option("file", arg_file)->required();

    auto* cmd_l0 = app.add_subcommand("l0-extend", "Extend Lambda_lambda to L_0 or refute");
    cmd_l0->add_option("--lambda", arg_lambda)->required();

    auto* cmd_gram = app.add_subcommand("gram", "Contravariant form matrix");
    cmd_gram->add_option("--h", arg_h);
    cmd_gram->add_option("--hp", arg_hp);
    cmd_gram->add_option("--c", arg_c);
    cmd_gram->add_option("--lambda", arg_lambda);
    cmd_gram->add_option("--maxdeg", arg_maxdeg);

    auto* cmd_kac = app.add_subcommand("kac", "Level pairing matrix and determinant");
    cmd_kac->add_option("--H", arg_big_h);
    cmd_kac->add_option("--c", arg_c);

    auto* cmd_red = app.add_subcommand("reducible", "Reducibility of V_{h+ih',c,lambda}");
    cmd_red->add_option("--h", arg_h);
    cmd_red->add_option("--hp", arg_hp);
    cmd_red->add_option("--c", arg_c);
    cmd_red->add_option("--lambda", arg_lambda);
    cmd_red->add_option("--max-level", arg_maxlevel);

    auto* cmd_sing = app.add_subcommand("singular", "Singular vector search at a level");
    cmd_sing->add_option("--H", arg_big_h);
    cmd_sing->add_option("--c", arg_c);

    auto* cmd_jet = app.add_subcommand("jet", "2-jet group and algebra operations");
    cmd_jet->require_subcommand(1);
    auto* jet_compose_cmd = cmd_jet->add_subcommand("compose", "Group law");
    jet_compose_cmd->add_option("x1", arg_x1)->required();
    jet_compose_cmd->add_option("x2", arg_x2)->required();
    jet_compose_cmd->add_option("y1", arg_y1)->required();
    jet_compose_cmd->add_option("y2", arg_y2)->required();
    auto* jet_exp_cmd = cmd_jet->add_subcommand("exp", "One-parameter flow");
    jet_exp_cmd->add_option("--x1", arg_x1)->required();
    jet_exp_cmd->add_option("--x2", arg_x2)->required();
    jet_exp_cmd->add_option("--s", arg_s)->required();
    auto* jet_chi_cmd = cmd_jet->add_subcommand("chi", "Character exp(i lambda log x1)");
    jet_chi_cmd->add_option("--lambda", arg_lambda)->required();
    jet_chi_cmd->add_option("--x1", arg_x1)->required();
    auto* jet_field_cmd = cmd_jet->add_subcommand("of-field", "2-jet of a vector field");
    jet_field_cmd->add_option("x", arg_x)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        auto rat = [](const std::string& s) { return Rational::from_string(s); };
        auto gq = [](const std::string& s) { return GaussianRational::from_string(s); };

        if (*cmd_bracket) {
            LieElement x = parse_element(arg_x, algebra_hint(arg_algebra));
            LieElement y = parse_element(arg_y, x.kind());
            std::string s = format_element(bracket(x, y));
            emit(opt, s, json{{"result", s}});
        } else if (*cmd_star) {
            std::string s = format_element(star(parse_element(arg_x, algebra_hint(arg_algebra))));
            emit(opt, s, json{{"result", s}});
        } else if (*cmd_phi) {
            LieElement x = parse_element(arg_x);
            GaussianRational v = arg_k == 0 ? phi_0(x) : phi_k(arg_k, x);
            emit(opt, v.to_string(), json{{"result", v.to_string()}});
        } else if (*cmd_mbasis) {
            std::string s = format_element(m_basis(arg_k, arg_n));
            emit(opt, s, json{{"result", s}});
        } else if (*cmd_closure || *cmd_classify_ideal) {
            Window w = require_window(opt);
            std::vector<LieElement> gens;
            for (const std::string& g : arg_generators)
                gens.push_back(parse_element(g, AlgebraKind::K0));
            SpanWindow span = ideal_closure_window(gens, w);
            if (*cmd_classify_ideal) {
                std::string s = classify_ideal_window(span).to_string();
                emit(opt, s, json{{"class", s}});
            } else {
                std::vector<std::string> basis;
                for (std::size_t r = 0; r < span.rank(); ++r)
                    basis.push_back(
                        format_element(row_to_element(span.rows, r, w, AlgebraKind::K0, false)));
                std::string text = "rank = " + std::to_string(span.rank());
                for (const std::string& b : basis)
                    text += "\n" + b;
                emit(opt, text, json{{"rank", span.rank()}, {"basis", basis}});
            }
        } else if (*cmd_reduce) {
            Window w = require_window(opt);
            std::ifstream in(arg_file);
            if (!in)
                throw std::domain_error("cannot open cocycle file: " + arg_file);
            ReduceResult r = reduce_cocycle(Cocycle::load(in, w));
            std::string mu = format_functional(r.mu);
            emit(opt, "t = " + r.t.to_string() + ", coboundary part: " + mu,
                 json{{"t", r.t.to_string()}, {"coboundary", mu}});
        } else if (*cmd_mcheck) {
            Window w = require_window(opt);
            GeneratorMap m = load_morphism(arg_file, w);
            MorphismCheckResult r = verify_star_morphism(m, w);
            std::string text = r.ok ? "valid"
                                    : "invalid at pair (" + std::to_string(r.first_a) + ", " +
                                          std::to_string(r.first_b) + ")";
            json j{{"valid", r.ok}};
            if (!r.ok)
                j["first_violation"] = {r.first_a, r.first_b};
            emit(opt, text, j);
        } else if (*cmd_mclass) {
            Window w = require_window(opt);
            GeneratorMap m = load_morphism(arg_file, w);
            verify_star_morphism(m, w);
            std::string s = classify_morphism(m).to_string();
            emit(opt, s, json{{"class", s}});
        } else if (*cmd_l0) {
            Window w = require_window(opt, 6);
            L0ExtensionResult r = l0_extension_solve(make_lambda(gq(arg_lambda), w), w);
            if (r.feasible) {
                std::string a = format_functional(r.a);
                emit(opt,
                     "a0 = " + r.a0.to_string() + ", b = " + r.b.to_string() + ", a = " + a,
                     json{{"feasible", true},
                          {"a0", r.a0.to_string()},
                          {"b", r.b.to_string()},
                          {"a", a}});
            } else {
                emit(opt, "infeasible: " + r.witness,
                     json{{"feasible", false}, {"witness", r.witness}});
            }
        } else if (*cmd_gram) {
            Weight w{rat(arg_h), rat(arg_hp), gq(arg_c), gq(arg_lambda)};
            GramResult g = gram_k_form(w, arg_maxdeg, opt.threads);
            std::string labels = "monomials:";
            json jl = json::array();
            for (const PBWMonomial& m : g.basis) {
                labels += " " + monomial_label(m, AlgebraKind::K);
                jl.push_back(monomial_label(m, AlgebraKind::K));
            }
            emit(opt, labels + "\n" + matrix_to_text(g.matrix),
                 json{{"monomials", jl}, {"matrix", matrix_to_json(g.matrix)}});
        } else if (*cmd_kac) {
            long level = opt.level > 0 ? opt.level : 1;
            Matrix s = shapovalov_matrix(gq(arg_big_h), gq(arg_c), level);
            GaussianRational d = det(s);
            emit(opt, matrix_to_text(s) + "\ndet = " + d.to_string(),
                 json{{"matrix", matrix_to_json(s)}, {"det", d.to_string()}});
        } else if (*cmd_red) {
            Weight w{rat(arg_h), rat(arg_hp), gq(arg_c), gq(arg_lambda)};
            ReducibilityResult r = reducibility_test(w, arg_maxlevel);
            std::string text =
                r.reducible ? "reducible (alpha=" + std::to_string(r.alpha) +
                                  ", beta=" + std::to_string(r.beta) + ")"
                            : "irreducible up to level " + std::to_string(arg_maxlevel);
            json j{{"reducible", r.reducible}, {"max_level", arg_maxlevel}};
            if (r.reducible) {
                j["alpha"] = r.alpha;
                j["beta"] = r.beta;
            }
            emit(opt, text, j);
        } else if (*cmd_sing) {
            long level = opt.level > 0 ? opt.level : 1;
            auto v = singular_vector_search(gq(arg_big_h), gq(arg_c), level);
            if (v)
                emit(opt, format_module_vector(*v, AlgebraKind::Vir),
                     json{{"vector", format_module_vector(*v, AlgebraKind::Vir)}});
            else
                emit(opt, "none", json{{"vector", nullptr}});
        } else if (*cmd_jet) {
            if (*jet_compose_cmd) {
                Jet2Group g = jet_compose(Jet2Group(rat(arg_x1), rat(arg_x2)),
                                          Jet2Group(rat(arg_y1), rat(arg_y2)));
                emit(opt, "(" + g.x1.to_string() + ", " + g.x2.to_string() + ")",
                     json{{"x1", g.x1.to_string()}, {"x2", g.x2.to_string()}});
            } else if (*jet_exp_cmd) {
                Jet2GroupF g = jet_exp(Jet2Algebra{rat(arg_x1), rat(arg_x2)}, rat(arg_s));
                emit(opt, "(" + fmt_double(g.x1) + ", " + fmt_double(g.x2) + ")",
                     json{{"x1", g.x1}, {"x2", g.x2}});
            } else if (*jet_chi_cmd) {
                auto z = chi_lambda(rat(arg_lambda), to_double(arg_x1));
                emit(opt, fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
                              fmt_double(std::abs(z.imag())) + "i",
                     json{{"re", z.real()}, {"im", z.imag()}});
            } else {
                Jet2Algebra a = jet_of_field(to_fourier(parse_element(arg_x, AlgebraKind::K0)));
                emit(opt, "(" + a.x1.to_string() + ", " + a.x2.to_string() + ")",
                     json{{"x1", a.x1.to_string()}, {"x2", a.x2.to_string()}});
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
