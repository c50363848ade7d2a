#include "doctest.h"

#include "kalg/fourier.hpp"
#include "kalg/parse.hpp"
#include "test_support.hpp"

using namespace kalg;

namespace {

LieElement k0(const std::string& s) { return parse_element(s, AlgebraKind::K0); }
LieElement kx(const std::string& s) { return parse_element(s, AlgebraKind::K); }
LieElement witt(const std::string& s) { return parse_element(s, AlgebraKind::Witt); }

LieElement gen(AlgebraKind kind, long n) { return LieElement::generator(kind, n); }

}  // namespace

TEST_CASE("bracket structure constants") {
    CHECK(bracket(kx("K[2]"), kx("K[-1]")) == kx("3*K[1] - 2*K[2] - K[-1]"));
    CHECK(bracket(kx("K[2]"), kx("K[-2]")) == kx("-2*K[2] - 2*K[-2] + 1/2*C"));
    // Without the extension there is no central term.
    CHECK(bracket(k0("K[2]"), k0("K[-2]")) == k0("-2*K[2] - 2*K[-2]"));

    CHECK_THROWS_AS(bracket(kx("K[1]"), k0("K[1]")), std::domain_error);

    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        LieElement x = testing::random_element(rng, AlgebraKind::K, 6);
        CHECK(bracket(x, x).is_zero());
    }
}

TEST_CASE("star operation") {
    CHECK(star(kx("(2+1i)*K[3]")) == kx("(2-1i)*K[-3]"));
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        LieElement x = testing::random_element(rng, AlgebraKind::K, 6);
        LieElement y = testing::random_element(rng, AlgebraKind::K, 6);
        CHECK(star(star(x)) == x);
        CHECK(star(bracket(x, y)) == bracket(star(y), star(x)));
    }
}

TEST_CASE("embedding into Vir and projection back") {
    CHECK(embed_in_vir(k0("K[1]")) == witt("L[1] - L[0]"));
    CHECK(embed_in_vir(k0("K[2] + K[-2]")) == witt("L[2] + L[-2] - 2*L[0]"));
    CHECK(project_to_k(witt("L[3] - L[0]")) == k0("K[3]"));
    CHECK(project_to_k(witt("L[1] - L[2]")) == k0("K[1] - K[2]"));
    CHECK_THROWS_AS(project_to_k(witt("L[1]")), std::domain_error);

    std::mt19937 rng(13);
    for (int t = 0; t < 30; ++t) {
        LieElement x = testing::random_element(rng, AlgebraKind::K, 8);
        CHECK(project_to_k(embed_in_vir(x)) == x);
    }
}

TEST_CASE("jet functionals") {
    for (long n = -6; n <= 6; ++n) {
        if (n == 0)
            continue;
        CHECK(phi_k(1, gen(AlgebraKind::K0, n)) == GaussianRational(Rational(BigInt(-n))));
    }
    CHECK(phi_k(2, k0("K[3]")) == GaussianRational(Rational(0), Rational(-9)));
    CHECK_THROWS_AS(phi_k(0, k0("K[1]")), std::domain_error);
    CHECK(phi_0(k0("K[5]")).is_zero());
    CHECK(phi_0(witt("L[2]")) == GaussianRational::i());

    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        LieElement x = testing::random_element(rng, AlgebraKind::K0, 6);
        LieElement y = testing::random_element(rng, AlgebraKind::K0, 6);
        CHECK(phi_k(1, bracket(x, y)).is_zero());
    }
}

TEST_CASE("M basis") {
    CHECK(m_basis(0, 5) == witt("L[5] - L[6]"));
    CHECK(m_basis(2, 1) == witt("L[1] - 3*L[2] + 3*L[3] - L[4]"));
    CHECK(phi_k(2, m_basis(2, 1)).is_zero());
    CHECK_FALSE(phi_k(3, m_basis(2, 1)).is_zero());
    // Recursive definition M^{k+1}_n = M^k_n - M^k_{n+1}.
    for (long k = 0; k <= 4; ++k)
        for (long n = -3; n <= 3; ++n)
            CHECK(m_basis(k + 1, n) == m_basis(k, n) - m_basis(k, n + 1));
}

TEST_CASE("subpol polynomial identity") {
    // sum_l (x+l)^k (-1)^l C(k+1,l) vanishes: evaluated at k+2 points via
    // phi_k, which is exactly that finite difference.
    for (long k = 1; k <= 8; ++k)
        for (long n = 0; n <= k + 1; ++n)
            CHECK(phi_k(k, m_basis(k, n)).is_zero());
}

TEST_CASE("M basis membership in the ideal chain") {
    for (long k = 1; k <= 5; ++k)
        for (long j = 1; j <= k; ++j)
            for (long n : {-4L, -1L, 0L, 3L})
                CHECK(phi_k(j, m_basis(k, n)).is_zero());
}

TEST_CASE("bracket formula in the M basis") {
    for (long k = 0; k <= 4; ++k)
        for (long m = -6; m <= 6; ++m)
            for (long n = -6; n <= 6; ++n) {
                LieElement lhs = bracket(m_basis(k, m), m_basis(k, n));
                LieElement rhs = m_basis(2 * k + 1, m + n) * GaussianRational(Rational(BigInt(m) - n));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("Jacobi identity on window 8") {
    for (AlgebraKind kind :
         {AlgebraKind::Witt, AlgebraKind::Vir, AlgebraKind::K0, AlgebraKind::K}) {
        long lo = is_k_family(kind) ? 1 : 0;
        for (long a = -8; a <= 8; ++a)
            for (long b = a; b <= 8; ++b)
                for (long c = b; c <= 8; ++c) {
                    if (is_k_family(kind) && (a == 0 || b == 0 || c == 0))
                        continue;
                    if (a < -8 + lo)
                        continue;
                    LieElement x = gen(kind, a), y = gen(kind, b), z = gen(kind, c);
                    LieElement jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                                     bracket(bracket(z, x), y);
                    CHECK(jac.is_zero());
                }
    }
}

TEST_CASE("K bracket agrees with the Vir-embedding bracket") {
    for (long m = -12; m <= 12; ++m)
        for (long n = -12; n <= 12; ++n) {
            if (m == 0 || n == 0)
                continue;
            LieElement direct = bracket(gen(AlgebraKind::K, m), gen(AlgebraKind::K, n));
            LieElement via_vir = project_to_k(
                bracket(embed_in_vir(gen(AlgebraKind::K, m)), embed_in_vir(gen(AlgebraKind::K, n))));
            CHECK(direct == via_vir);
        }
}

TEST_CASE("fourier realization") {
    FourierField f = to_fourier(k0("K[2]"));
    CHECK(f.coeff(2) == GaussianRational::i());
    CHECK(f.coeff(0) == -GaussianRational::i());
    CHECK(f.coefficients().size() == 2);

    FourierField l0 = to_fourier(witt("L[0]"));
    CHECK(l0.coeff(0) == GaussianRational::i());
    CHECK(l0.coefficients().size() == 1);

    CHECK_THROWS_AS(to_fourier(kx("K[1] + C")), std::domain_error);

    // [i(e^{i t}-1), i(e^{-i t}-1)] is the field of -K_1 - K_{-1}.
    FourierField lhs = field_bracket(to_fourier(k0("K[1]")), to_fourier(k0("K[-1]")));
    CHECK(lhs == to_fourier(k0("-K[1] - K[-1]")));

    std::mt19937 rng(21);
    for (int t = 0; t < 200; ++t) {
        LieElement x = testing::random_element(rng, AlgebraKind::K0, 7);
        LieElement y = testing::random_element(rng, AlgebraKind::K0, 7);
        CHECK(field_bracket(to_fourier(x), to_fourier(x)).is_zero());
        CHECK(field_bracket(to_fourier(x), to_fourier(y)) == to_fourier(bracket(x, y)));
        CHECK(phi_k(1, x) == phi_k(1, to_fourier(x)));
        // Fields vanishing at 0 are closed under the bracket.
        CHECK(to_fourier(x).vanishes_at_zero());
        CHECK(field_bracket(to_fourier(x), to_fourier(y)).vanishes_at_zero());
    }
}
