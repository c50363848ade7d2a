#include "doctest.h"

#include "kalg/cohomology.hpp"
#include "kalg/parse.hpp"
#include "test_support.hpp"

#include <cstdlib>
#include <sstream>

using namespace kalg;

namespace {

std::map<long, GaussianRational> random_mu(std::mt19937& rng, const Window& w) {
    std::map<long, GaussianRational> mu;
    for (long n = -w.bound; n <= w.bound; ++n) {
        if (n == 0)
            continue;
        mu[n] = testing::random_gaussian(rng);
    }
    return mu;
}

}  // namespace

TEST_CASE("cocycle storage and conventions") {
    Cocycle c{Window(5)};
    c.set(2, -1, GaussianRational(3));
    CHECK(*c.value(2, -1) == GaussianRational(3));
    CHECK(*c.value(-1, 2) == GaussianRational(-3));
    CHECK(c.value(3, 0).has_value());
    CHECK(c.value(3, 0)->is_zero());
    c.mark_undefined(4, 5);
    CHECK_FALSE(c.value(5, 4).has_value());
}

TEST_CASE("cocycle identity check") {
    CHECK(cocycle_check(Cocycle::virasoro(Window(8))).ok);

    std::mt19937 rng(51);
    Window w(6);
    CHECK(cocycle_check(coboundary_from_mu(random_mu(rng, w), w)).ok);

    Cocycle bad{Window(4)};
    bad.set(1, 2, GaussianRational(1));
    CocycleCheckResult r = cocycle_check(bad);
    CHECK_FALSE(r.ok);
}

TEST_CASE("commutator basis") {
    Window w(6);
    CommutatorBasis basis = commutator_basis(w);
    CHECK(basis.elements.size() == 11);  // 2N-1

    auto find = [&](const std::string& label) {
        for (const auto& [l, e] : basis.elements)
            if (l == label)
                return e;
        FAIL("missing basis element ", label);
        return LieElement::zero(AlgebraKind::K0);
    };
    CHECK(find("[K_1,K_-1]") == parse_element("-K[1] - K[-1]", AlgebraKind::K0));
    CHECK(find("[K_-2,K_1]") == parse_element("-3*K[-1] + 2*K[-2] + K[1]", AlgebraKind::K0));

    CHECK_THROWS_AS(commutator_basis(Window(2)), std::domain_error);
}

TEST_CASE("H1: commutator span has codimension one and phi_1 kills it") {
    for (long n = 4; n <= 8; ++n) {
        Window w(n);
        CommutatorBasis basis = commutator_basis(w);
        std::vector<LieElement> elems;
        for (const auto& [l, e] : basis.elements) {
            CHECK(phi_k(1, e).is_zero());
            elems.push_back(e);
        }
        CHECK(span_from_elements(elems, w, false).rank() == 2 * static_cast<std::size_t>(n) - 1);
        elems.push_back(LieElement::generator(AlgebraKind::K0, 1));
        CHECK(span_from_elements(elems, w, false).rank() == 2 * static_cast<std::size_t>(n));
    }
}

TEST_CASE("coboundaries") {
    Window w(6);
    std::map<long, GaussianRational> delta1{{1, GaussianRational(1)}};
    Cocycle c = coboundary_from_mu(delta1, w);
    CHECK(*c.value(2, -1) == GaussianRational(3));  // [K_2,K_-1] = 3K_1 - 2K_2 - K_-1

    Cocycle zero = coboundary_from_mu({}, w);
    CHECK(zero.entries().empty());

    // mu(K_j) = j kills every bracket.
    std::map<long, GaussianRational> phi;
    for (long n = -w.bound; n <= w.bound; ++n)
        if (n != 0)
            phi[n] = GaussianRational(Rational(BigInt(n)));
    Cocycle phicob = coboundary_from_mu(phi, w);
    CHECK(phicob.entries().empty());

    // Brackets reaching past the window mark their entries undefined.
    CHECK_FALSE(coboundary_from_mu(delta1, w).is_defined(5, 2));
}

TEST_CASE("reduction of the Virasoro cocycle") {
    ReduceResult r = reduce_cocycle(Cocycle::virasoro(Window(10)));
    CHECK(r.t == GaussianRational(1));
    CHECK(r.mu.empty());
    for (const auto& [key, v] : r.residual.entries())
        CHECK(key.first == -key.second);
}

TEST_CASE("reduction of a pure coboundary gives t = 0") {
    std::mt19937 rng(151);
    Window w(10);
    ReduceResult r = reduce_cocycle(coboundary_from_mu(random_mu(rng, w), w));
    CHECK(r.t == GaussianRational(0));
    const long interior = w.bound - 3;
    for (long m = -interior; m <= interior; ++m)
        for (long n = m + 1; n <= interior; ++n) {
            if (m == 0 || n == 0 || std::labs(m + n) > interior)
                continue;
            CHECK(r.residual.value(m, n)->is_zero());
        }
}

TEST_CASE("reduction recovers the class exactly") {
    std::mt19937 rng(53);
    Window w(10);
    for (int t = 0; t < 10; ++t) {
        GaussianRational scale = testing::random_gaussian(rng);
        Cocycle mix =
            cocycle_add(coboundary_from_mu(random_mu(rng, w), w),
                        cocycle_scale(Cocycle::virasoro(w), scale));
        ReduceResult r = reduce_cocycle(mix);
        CHECK(r.t == scale);
    }
}

TEST_CASE("reduction output is invariant under adding coboundaries") {
    std::mt19937 rng(59);
    Window w(10);
    Cocycle base = cocycle_add(coboundary_from_mu(random_mu(rng, w), w),
                               cocycle_scale(Cocycle::virasoro(w), GaussianRational(7)));
    ReduceResult r1 = reduce_cocycle(base);
    CHECK(r1.t == GaussianRational(7));
    Cocycle shifted = cocycle_add(base, coboundary_from_mu(random_mu(rng, w), w));
    ReduceResult r2 = reduce_cocycle(shifted);
    CHECK(r2.t == r1.t);
}

TEST_CASE("reduction rejects non-cocycles") {
    Cocycle bad{Window(6)};
    bad.set(1, 2, GaussianRational(1));
    CHECK_THROWS_AS(reduce_cocycle(bad), std::domain_error);
    CHECK_THROWS_AS(reduce_cocycle(Cocycle::virasoro(Window(4))), std::domain_error);
}

TEST_CASE("cocycle file round trip") {
    Window w(10);
    Cocycle vir = Cocycle::virasoro(w);
    std::ostringstream out;
    vir.save(out);
    std::istringstream in(out.str());
    Cocycle back = Cocycle::load(in, w);
    CHECK(back.entries() == vir.entries());

    std::istringstream bad("2 1 1 0\n");
    CHECK_THROWS_AS(Cocycle::load(bad, w), std::invalid_argument);
}
