#pragma once

#include "kalg/span.hpp"

#include <map>
#include <optional>
#include <string>

namespace kalg {

/// A morphism of K given by generator images on a domain window.
/// images(-n) = star(images(n)) whenever the map is star-compatible; the
/// central image is a scalar multiple of C.
struct GeneratorMap {
    Window domain;
    std::map<long, LieElement> images;  // K-kind values, one per nonzero |n| <= domain.bound
    LieElement central_image{AlgebraKind::K};
    bool star_compatible = false;  // set by verify_star_morphism or the factories
    std::string note;              // e.g. the sigma normalization performed

    const LieElement& image(long n) const;
};

/// Linear extension of the generator images to a whole element. Throws when
/// the support leaves the domain window.
LieElement apply(const GeneratorMap& m, const LieElement& x);

/// Composition (first∘second)(K_n) = first(second(K_n)); the inner images
/// must stay inside the outer domain.
GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second);

/// Lambda_lam: K_n -> K_n + i n lam C, C -> C, for real lam.
GeneratorMap make_lambda(const GaussianRational& lam, const Window& w);

/// tau: K_n -> -K_{-n}, C -> -C.
GeneratorMap make_tau(const Window& w);

/// delta_r on K: K_n -> (1/r) K_{rn} - (C/24)(r - 1/r), C -> r C.
/// The constant central shift is what makes the m = -n relation of the
/// bracket close; it is validated by verify_star_morphism, not transcribed.
GeneratorMap make_delta(long r, const Window& w);

/// sigma_alpha built on a base element K with [K,K*] = -K-K*. A central
/// defect [K,K*] = -K-K* + kappa C is absorbed by replacing K with
/// K - (kappa/2) C; the normalization is recorded in the note.
GeneratorMap make_sigma(const GaussianRational& alpha, const LieElement& k_base, const Window& w);

struct MorphismCheckResult {
    bool ok = true;
    long first_a = 0, first_b = 0;  // first violating pair when !ok
};

/// Checks m([K_a,K_b]) = [m(K_a), m(K_b)] (central terms included) for every
/// window pair whose bracket stays in the domain window, plus
/// m(x*) = m(x)* on generators.
MorphismCheckResult verify_star_morphism(GeneratorMap& m, const Window& w);

/// Exact null space of the linear map on the window coordinates
/// (K-indices plus the central coordinate).
SpanWindow kernel_window(const GeneratorMap& m, const Window& w);

struct MorphismClass {
    enum class Tag {
        LambdaAuto,     // Lambda_lambda
        LambdaTau,      // Lambda_lambda ∘ tau
        SigmaHalfLine,  // sigma_alpha, Re alpha = 1/2  (kernel K_1 ⊕ CC)
        SigmaGeneric,   // sigma_alpha, Re alpha != 1/2 (kernel K_2 ⊕ CC)
        PositiveType,   // injective, images in K_+ ⊕ CC, coefficient sums 1/N
        NegativeType,   // mirror image of PositiveType
        CentralType,    // K_n -> i n lambda C
        Invalid,
        Unknown
    };
    Tag tag = Tag::Unknown;
    GaussianRational lambda;                  // LambdaAuto/LambdaTau/CentralType
    GaussianRational alpha;                   // Sigma branches
    std::optional<LieElement> k_base;         // Sigma branches
    long n_param = 0;                         // PositiveType/NegativeType

    std::string to_string() const;
};

/// Decision tree on the shapes of the K_1 and K_2 images, following the
/// endomorphism taxonomy; Invalid/Unknown are values, not errors.
MorphismClass classify_morphism(const GeneratorMap& m);

struct L0ExtensionResult {
    bool feasible = false;
    // Lambda(L_0) = a0 L_0 + sum a_n K_n + b C when feasible.
    GaussianRational a0;
    GaussianRational b;
    std::map<long, GaussianRational> a;
    std::string witness;  // infeasibility certificate text when !feasible
};

/// Solves for an extension of the morphism to L_0 with support in the
/// window, imposing Lambda([K_j, L_0]) = [Lambda(K_j), Lambda(L_0)] for
/// j in {±1, ±2} together with self-adjointness of the image. Exact; returns
/// either the solution or the witness row proving 0 = nonzero.
L0ExtensionResult l0_extension_solve(const GeneratorMap& m, const Window& w);

}  // namespace kalg
