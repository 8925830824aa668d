#include <doctest.h>

#include <cmath>

#include "bessel.hpp"
#include "oracles.hpp"

using namespace solwave;
using namespace solwave::exact;

TEST_CASE("coefficient tables for small orders") {
    auto k0 = k_half(0);
    REQUIRE(k0.coeff.size() == 1);
    CHECK(k0.coeff[0] == 1);

    auto k1 = k_half(1);
    REQUIRE(k1.coeff.size() == 2);
    CHECK(k1.coeff[0] == 1);
    CHECK(k1.coeff[1] == 1);

    auto k2 = k_half(2);
    REQUIRE(k2.coeff.size() == 3);
    CHECK(k2.coeff[0] == 1);
    CHECK(k2.coeff[1] == 3);
    CHECK(k2.coeff[2] == 3);

    auto k3 = k_half(3);
    REQUIRE(k3.coeff.size() == 4);
    CHECK(k3.coeff[0] == 1);
    CHECK(k3.coeff[1] == 6);
    CHECK(k3.coeff[2] == 15);
    CHECK(k3.coeff[3] == 15);
}

TEST_CASE("coefficient structure: leading 1, trailing double factorial") {
    for (int n = 0; n <= 40; ++n) {
        auto k = k_half(n);
        REQUIRE(int(k.coeff.size()) == n + 1);
        CHECK(k.coeff[0] == 1);
        CHECK(k.coeff[n] == double_factorial_odd(n));
    }
    // (2n-1)!! no longer fits in 64 bits from n = 18 on; the table must not care
    CHECK(double_factorial_odd(18) > Int(UINT64_MAX));
}

TEST_CASE("recurrence c^{(n+1)}_j = c^{(n-1)}_j + (2n+1) c^{(n)}_{j-1} holds exactly") {
    for (int n = 1; n <= 30; ++n) {
        auto lo = k_half(n - 1), mid = k_half(n), hi = k_half(n + 1);
        for (int j = 0; j <= n + 1; ++j) {
            Int expect = 0;
            if (j < int(lo.coeff.size())) expect += lo.coeff[j];
            if (j >= 1) expect += Int(2 * n + 1) * mid.coeff[j - 1];
            CHECK(hi.coeff[j] == expect);
        }
    }
}

TEST_CASE("order cap is enforced and configurable") {
    CHECK_NOTHROW(k_half(kMaxHalfOrder));
    CHECK_THROWS_AS(k_half(kMaxHalfOrder + 1), Error);
    CHECK_NOTHROW(k_half(kMaxHalfOrder + 1, kMaxHalfOrder + 1));
    CHECK_THROWS_AS(k_half(-1), Error);
}

TEST_CASE("numeric values against the independent library implementation") {
    // K_{1/2}(1) = sqrt(pi/2)/e
    CHECK(eval_k_half(0, 1.0) ==
          doctest::Approx(std::sqrt(M_PI / 2.0) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(eval_k_half(0, 1.0) == doctest::Approx(0.461068504).epsilon(1e-9));

    for (int n = 0; n <= 6; ++n)
        for (double x : {0.3, 1.0, 2.5, 10.0})
            CHECK(eval_k_half(n, x) ==
                  doctest::Approx(std::cyl_bessel_k(n + 0.5, x)).epsilon(1e-12));

    CHECK_THROWS_AS(eval_k_half(0, 0.0), Error);
    CHECK_THROWS_AS(eval_k_half(0, -1.0), Error);
}

TEST_CASE("numeric three-term recurrence K_{nu+1} = (2nu/x) K_nu + K_{nu-1}") {
    // with nu = n - 1/2:  K_{n+1/2} = ((2n-1)/x) K_{n-1/2} + K_{n-3/2}
    for (int n = 2; n <= 12; ++n)
        for (double x = 0.1; x <= 50.0; x *= 2.3) {
            double lhs = eval_k_half(n, x);
            double rhs = ((2.0 * n - 1.0) / x) * eval_k_half(n - 1, x) + eval_k_half(n - 2, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("transform of the basic power weight: closed form vs quadrature") {
    // d = 1: lambda = 1 gives pi e^{-|xi|} exactly
    auto e1 = ft_power_weight(1, 1);
    CHECK(e1.scale.rat == Rat(2));
    CHECK(e1.scale.pi_half_pow == 1);
    CHECK(e1.mu == Rat(1, 2));
    CHECK(e1.nu == Rat(1, 2));
    for (double xi : {0.5, 1.0, 2.0})
        CHECK(eval_radial_expr(e1, xi) == doctest::Approx(M_PI * std::exp(-xi)).epsilon(1e-13));

    // d = 1, lambda = 1..4 against oscillatory quadrature of the definition
    for (int lam = 1; lam <= 4; ++lam) {
        auto e = ft_power_weight(lam, 1);
        for (double xi : {0.5, 1.5, 3.0})
            CHECK(eval_radial_expr(e, xi) ==
                  doctest::Approx(solwave_test::ft_power_weight_1d(lam, xi)).epsilon(1e-8));
    }

    // d = 3, lambda = 2: pi^2 e^{-rho}
    auto e32 = ft_power_weight(2, 3);
    CHECK(e32.scale.rat == Rat(2));
    CHECK(e32.scale.pi_half_pow == 3);
    CHECK(e32.mu == Rat(1, 2));
    for (double rho : {1.0, 2.0}) {
        CHECK(eval_radial_expr(e32, rho) ==
              doctest::Approx(M_PI * M_PI * std::exp(-rho)).epsilon(1e-12));
        CHECK(eval_radial_expr(e32, rho) ==
              doctest::Approx(solwave_test::ft_power_weight_3d(2, rho)).epsilon(1e-8));
    }

    // lambda = 4, d = 1: scale 2/3!, mu = 7/2
    auto e4 = ft_power_weight(4, 1);
    CHECK(e4.scale.rat == Rat(1, 3));
    CHECK(e4.mu == Rat(7, 2));

    CHECK_THROWS_AS(ft_power_weight(0, 1), Error);
    CHECK_THROWS_AS(ft_power_weight(1, 2), Error);   // even dimension unsupported
    CHECK_THROWS_AS(ft_power_weight(2, 4), Error);
}

TEST_CASE("reduction to the K_{1/2} basis") {
    // 8 sqrt(pi) (x/2)^{3/2} K_{3/2}  ->  4 sqrt(pi) (x+1) (x/2)^{1/2} K_{1/2}
    RadialFourierExpr e{PiScalar(Rat(8), 1), Rat(3, 2), Rat(3, 2)};
    auto r = reduce_to_basis(e);
    CHECK(r.scale.rat == Rat(4));
    CHECK(r.scale.pi_half_pow == 1);
    REQUIRE(r.poly.size() == 2);
    CHECK(r.poly[0] == Rat(1));
    CHECK(r.poly[1] == Rat(1));

    // 16 sqrt(pi) (x/2)^{7/2} K_{7/2} -> 2 sqrt(pi) (x^3+6x^2+15x+15) basis
    RadialFourierExpr e7{PiScalar(Rat(16), 1), Rat(7, 2), Rat(7, 2)};
    auto r7 = reduce_to_basis(e7);
    CHECK(r7.scale.rat == Rat(2));
    REQUIRE(r7.poly.size() == 4);
    CHECK(r7.poly[0] == Rat(15));
    CHECK(r7.poly[1] == Rat(15));
    CHECK(r7.poly[2] == Rat(6));
    CHECK(r7.poly[3] == Rat(1));

    // 8 pi^{3/2} (x/2)^{5/2} K_{5/2} -> 2 pi^{3/2} (x^2+3x+3) basis
    RadialFourierExpr e5{PiScalar(Rat(8), 3), Rat(5, 2), Rat(5, 2)};
    auto r5 = reduce_to_basis(e5);
    CHECK(r5.scale.rat == Rat(2));
    CHECK(r5.scale.pi_half_pow == 3);
    REQUIRE(r5.poly.size() == 3);
    CHECK(r5.poly[0] == Rat(3));
    CHECK(r5.poly[1] == Rat(3));
    CHECK(r5.poly[2] == Rat(1));

    // reduction preserves numeric value
    for (double x : {0.7, 1.3, 4.0}) {
        CHECK(eval_reduced(r7, x) == doctest::Approx(eval_radial_expr(e7, x)).epsilon(1e-12));
        CHECK(eval_reduced(r5, x) == doctest::Approx(eval_radial_expr(e5, x)).epsilon(1e-12));
    }

    // mu > nu leaves zero low-order coefficients
    RadialFourierExpr pad{PiScalar(Rat(1), 0), Rat(5, 2), Rat(3, 2)};
    auto rp = reduce_to_basis(pad);
    REQUIRE(rp.poly.size() == 3);
    CHECK(rp.poly[0] == Rat(0));
    CHECK(rp.poly[1] == Rat(1));
    CHECK(rp.poly[2] == Rat(1));

    // lambda = 1 in d = 3 keeps a negative power: not polynomial
    auto e13 = ft_power_weight(1, 3);
    CHECK(e13.mu == Rat(-1, 2));
    CHECK_THROWS_AS(reduce_to_basis(e13), Error);

    // integer order is outside the basis
    RadialFourierExpr ei{PiScalar(Rat(1), 0), Rat(1), Rat(1)};
    CHECK_THROWS_AS(reduce_to_basis(ei), Error);
}

TEST_CASE("reduction composes with the transform end to end") {
    // lambda = 2, d = 1: the full chain 2 sqrt(pi) (x/2)^{3/2} K_{3/2} reduces
    // to sqrt(pi) (x+1) e^{-x} / ... and matches quadrature
    auto e = ft_power_weight(2, 1);
    auto r = reduce_to_basis(e);
    CHECK(r.scale.rat == Rat(1));
    CHECK(r.scale.pi_half_pow == 1);
    REQUIRE(r.poly.size() == 2);
    CHECK(r.poly[0] == Rat(1));
    CHECK(r.poly[1] == Rat(1));
    // value check: pi/2 (1+xi) e^{-xi}
    for (double xi : {0.9, 2.1})
        CHECK(eval_reduced(r, xi) ==
              doctest::Approx(0.5 * M_PI * (1.0 + xi) * std::exp(-xi)).epsilon(1e-13));

    // lambda = 4, d = 1 chain: (2 sqrt(pi)/6)(x/2)^{7/2} K_{7/2}
    auto e4 = ft_power_weight(4, 1);
    auto r4 = reduce_to_basis(e4);
    CHECK(r4.scale.rat == Rat(1, 24));     // (1/3) * 2^{-3}
    REQUIRE(r4.poly.size() == 4);
    CHECK(r4.poly[3] == Rat(1));
    for (double xi : {0.8, 1.7})
        CHECK(eval_reduced(r4, xi) ==
              doctest::Approx(solwave_test::ft_power_weight_1d(4, xi)).epsilon(1e-8));
}
