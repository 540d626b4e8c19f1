#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"

using namespace rmhd;

namespace {

// The closed-form regression point: p=1, eps=3, cs2=1/3, |h|^2=1, h1=1, m=1.
LocalParams ex1() {
    LocalParams lp;
    lp.p = 1;
    lp.eps = 3;
    lp.cs2 = 1.0 / 3.0;
    lp.hsq = 1;
    lp.h1 = 1;
    lp.m = 1;
    return lp;
}

} // namespace

TEST_CASE("Q polynomial pointwise") {
    LocalParams lp = ex1();
    // y = 0: constant term m cs2 h1^2/(p+eps) = 1/12.
    CHECK(q_polynomial(0, lp) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    // h = 0: root at y^2 = cs2/(1-cs2) = 1/2.
    LocalParams hy = lp;
    hy.hsq = hy.h1 = 0;
    CHECK(q_polynomial(1.0 / std::sqrt(2.0), hy) ==
          doctest::Approx(0.0).scale(1));
    // Fast root of the full EX1 parameters.
    CHECK(q_polynomial(std::sqrt(0.695194), lp) ==
          doctest::Approx(0.0).scale(1).epsilon(1e-6));
}

TEST_CASE("EX1 speeds regression") {
    const CharacteristicSpeeds cs = characteristic_speeds(ex1());
    CHECK(cs.u_sl == doctest::Approx(0.424036).epsilon(2e-6));
    CHECK(cs.u_A == doctest::Approx(0.447214).epsilon(2e-6));
    CHECK(cs.u_A_star == doctest::Approx(0.455090).epsilon(2e-6));
    CHECK(cs.u_f == doctest::Approx(0.833783).epsilon(2e-6));
    // Closed forms: u_A^2 = 1/5, u_A*^2 = (sqrt(2)-1)/2.
    CHECK(cs.u_A * cs.u_A == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(cs.u_A_star * cs.u_A_star ==
          doctest::Approx((std::sqrt(2.0) - 1) / 2).epsilon(1e-12));
}

TEST_CASE("degenerate field configurations") {
    LocalParams lp = ex1();
    SUBCASE("h1 = 0") {
        lp.h1 = 0;
        const CharacteristicSpeeds cs = characteristic_speeds(lp);
        CHECK(cs.u_sl == 0.0);
        CHECK(cs.u_A == 0.0);
        CHECK(cs.u_A_star == 0.0);
        const double uf2 =
            (lp.cs2 + lp.m * lp.hsq / (lp.p + lp.eps)) / (1 - lp.cs2);
        CHECK(cs.u_f * cs.u_f == doctest::Approx(uf2).epsilon(1e-12));
    }
    SUBCASE("h = 0: acoustic case") {
        lp.h1 = 0;
        lp.hsq = 0;
        const CharacteristicSpeeds cs = characteristic_speeds(lp);
        CHECK(cs.u_f ==
              doctest::Approx(std::sqrt(lp.cs2 / (1 - lp.cs2))).epsilon(1e-12));
        CHECK(cs.u_sl == 0.0);
        CHECK(cs.u_A == 0.0);
        CHECK(cs.u_A_star == 0.0);
    }
    SUBCASE("p + eps <= 0") {
        lp.p = -4;
        CHECK_THROWS_AS(characteristic_speeds(lp), DegenerateField);
    }
}

TEST_CASE("speed ordering over randomized physical parameters (Eq. 22)") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        LocalParams lp;
        lp.p = 0.1 + 5 * U(rng);
        lp.eps = 0.5 + 10 * U(rng);
        lp.cs2 = 0.05 + 0.9 * U(rng);
        lp.h1 = 0.05 + 3 * U(rng);
        lp.hsq = lp.h1 * lp.h1 * (1.01 + 4 * U(rng)); // |h|^2 > (h1)^2
        lp.m = 0.1 + 2 * U(rng);
        const CharacteristicSpeeds cs = characteristic_speeds(lp);
        CHECK(cs.u_sl < cs.u_A);
        CHECK(cs.u_A < cs.u_A_star);
        CHECK(cs.u_A_star < cs.u_f);
        // Closed-form roots actually solve their polynomials.
        const double qs = std::abs(q_polynomial(0, lp)) +
                          std::abs(q_polynomial(1, lp)) + 1;
        CHECK(std::abs(q_polynomial(cs.u_sl, lp)) < 1e-10 * qs);
        CHECK(std::abs(q_polynomial(cs.u_f, lp)) < 1e-10 * qs);
        const double rs = std::abs(rstar_polynomial(0, lp)) +
                          std::abs(rstar_polynomial(1, lp)) + 1;
        CHECK(std::abs(rstar_polynomial(cs.u_A_star, lp)) < 1e-10 * rs);
    }
}

TEST_CASE("Q factorization identity") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    LocalParams lp;
    lp.p = 1.3;
    lp.eps = 2.4;
    lp.cs2 = 0.4;
    lp.h1 = 0.8;
    lp.hsq = 1.5;
    lp.m = 0.9;
    const CharacteristicSpeeds cs = characteristic_speeds(lp);
    for (int i = 0; i < 20; ++i) {
        const double y = 2.5 * U(rng);
        const double lhs = q_polynomial(y, lp);
        const double rhs = (1 - lp.cs2) * (y * y - cs.u_f * cs.u_f) *
                           (y * y - cs.u_sl * cs.u_sl);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1));
    }
}

TEST_CASE("D polynomial pointwise") {
    LocalParams lp;
    lp.p = 1;
    lp.eps = 3;
    lp.cs2 = 1.0 / 3.0;
    lp.m = 1;
    // h = 0, y = 1: (2/3) - (2/3 - 1) - 1/3 = 2/3.
    CHECK(d_polynomial(1.0, lp) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(d_polynomial(0.0, lp) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("regime classification") {
    using testbed::eos_third;
    CHECK(classify_regime(testbed::fig1_upstream(), eos_third()) ==
          ShockRegime::Fast);
    CHECK(classify_regime(testbed::fig3_upstream(), eos_third()) ==
          ShockRegime::Fast);
    CHECK(classify_regime(testbed::fig2_upstream(), eos_third()) ==
          ShockRegime::Slow);
    // u1 = 0.6 sits in the gap (u_A, u_f) for the fig1 field parameters.
    const FluidState gap =
        make_fluid_state_p(0.6, 0, 1.0, 0.5, 1.0, 1.0, eos_third(), 1.0);
    CHECK(classify_regime(gap, eos_third()) == ShockRegime::NotEvolutionary);
    // Scaled variants around the characteristic speeds of the gap state.
    const LocalParams lp = local_params(gap, eos_third());
    const CharacteristicSpeeds cs = characteristic_speeds(lp);
    CHECK(cs.u_A < 0.6);
    CHECK(0.6 < cs.u_f);
}
