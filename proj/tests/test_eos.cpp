#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rmhd/eos.hpp"

using namespace rmhd;

TEST_CASE("linear pressure") {
    const EosSpec e = EosSpec::linear(1.0 / 3.0);
    CHECK(pressure(e, 3.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pressure(e, 1e-12, 1.0) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(pressure(e, 2.0, 5.0) == pressure(e, 2.0, 0.1)); // n-independent
    CHECK_THROWS_AS(pressure(e, -1.0, 1.0), NonPositiveInput);
    CHECK_THROWS_AS(pressure(e, 1.0, 0.0), NonPositiveInput);
}

TEST_CASE("spec invariants") {
    CHECK_THROWS_AS(EosSpec::linear(1.5), ValidationError);
    CHECK_THROWS_AS(EosSpec::linear(0.0), ValidationError);
    CHECK_THROWS_AS(EosSpec::anomalous_window(0.3, 0.4, 2, 4, 0.5),
                    ValidationError); // kappa_in >= kappa_out
    CHECK_THROWS_AS(EosSpec::anomalous_window(0.4, 0.3, 4, 2, 0.5),
                    ValidationError); // eps_lo >= eps_hi
    CHECK_THROWS_AS(EosSpec::anomalous_window(0.4, 0.3, 2, 4, 0.0),
                    ValidationError);
}

TEST_CASE("anomalous window interpolation") {
    const EosSpec e = EosSpec::anomalous_window(1.0 / 3.0, 0.05, 2, 4, 0.5);
    // Outside the window kappa = kappa_out.
    CHECK(pressure(e, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // Window center, smoothing saturated: kappa = kappa_in.
    CHECK(pressure(e, 3.0, 1.0) == doctest::Approx(0.05 * 3.0).epsilon(1e-14));
    // C^1 interpolant against its own closed form at a mid-ramp point.
    const double t = (2.3 - 2.0) / 0.5;
    const double s = t * t * (3 - 2 * t);
    CHECK(pressure(e, 2.3, 1.0) ==
          doctest::Approx((1.0 / 3.0 + (0.05 - 1.0 / 3.0) * s) * 2.3)
              .epsilon(1e-14));
}

TEST_CASE("sound speed: linear") {
    CHECK(sound_speed_sq(EosSpec::linear(1.0 / 3.0), 7.7, 0.3) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(sound_speed_sq(EosSpec::linear(0.9), 1.0, 1.0) ==
          doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("sound speed: anomalous, against isentropic finite difference") {
    const EosSpec e = EosSpec::anomalous_window(1.0 / 3.0, 0.05, 2, 4, 0.5);
    const double eps = 3.0, n = 1.0;
    const double cs2 = sound_speed_sq(e, eps, n);
    CHECK(cs2 < 1.0 / 3.0);
    // Centered difference of p along the isentrope d(eps) = (p+eps)/n dn.
    // Here p = p(eps) only, so the isentropic derivative is just dp/deps.
    const double d = 1e-6 * eps;
    const double fd =
        (pressure(e, eps + d, n) - pressure(e, eps - d, n)) / (2 * d);
    CHECK(cs2 == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("causality violation is reported") {
    // Steep window: |kappa'| eps exceeds kappa somewhere on the ramp.
    const EosSpec e = EosSpec::anomalous_window(1.0 / 3.0, 0.05, 2, 4, 0.05);
    CHECK_THROWS_AS(sound_speed_sq(e, 2.03, 1.0), CausalityViolation);
}

TEST_CASE("entropy per baryon: linear closed form") {
    const EosSpec e = EosSpec::linear(1.0 / 3.0);
    CHECK(entropy_per_baryon(e, 16.0, 2.0) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(entropy_per_baryon(e, 1.0, 1.0) == doctest::Approx(0.0));
    // Isentropic scaling: n -> lambda n, eps -> lambda^{4/3} eps.
    const double S0 = entropy_per_baryon(e, 2.0, 0.7);
    const double lam = 3.1;
    CHECK(entropy_per_baryon(e, 2.0 * std::pow(lam, 4.0 / 3.0), 0.7 * lam) ==
          doctest::Approx(S0).epsilon(1e-12));
}

namespace {

// Continuation along an isentrope: d eps = ((p+eps)/n) dn.
void check_isentrope(const EosSpec& e, double eps, double n) {
    const double S0 = entropy_per_baryon(e, eps, n);
    const int steps = 100;
    const double dn = 0.002 * n;
    auto f = [&](double ee, double nn) { return (pressure(e, ee, nn) + ee) / nn; };
    for (int i = 0; i < steps; ++i) {
        // Classic RK4 for the isentrope ODE in n.
        const double k1 = f(eps, n);
        const double k2 = f(eps + 0.5 * dn * k1, n + 0.5 * dn);
        const double k3 = f(eps + 0.5 * dn * k2, n + 0.5 * dn);
        const double k4 = f(eps + dn * k3, n + dn);
        eps += dn * (k1 + 2 * k2 + 2 * k3 + k4) / 6;
        n += dn;
    }
    CHECK(entropy_per_baryon(e, eps, n) == doctest::Approx(S0).epsilon(1e-8));
}

} // namespace

TEST_CASE("isentrope consistency (TdS = 0)") {
    check_isentrope(EosSpec::linear(1.0 / 3.0), 2.0, 1.0);
    check_isentrope(EosSpec::linear(0.6), 5.0, 2.0);
    check_isentrope(EosSpec::anomalous_window(1.0 / 3.0, 1.0 / 3.0 - 0.017,
                                              5.0, 6.2, 0.5),
                    4.5, 1.0); // crosses the window
}

TEST_CASE("random draws stay physical") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const EosSpec lin = EosSpec::linear(1.0 / 3.0);
    const EosSpec win =
        EosSpec::anomalous_window(1.0 / 3.0, 1.0 / 3.0 - 0.017, 5.0, 6.2, 0.5);
    for (int i = 0; i < 500; ++i) {
        const double eps = 0.1 + 10 * U(rng), n = 0.1 + 5 * U(rng);
        for (const EosSpec& e : {lin, win}) {
            CHECK(pressure(e, eps, n) > 0);
            const double cs2 = sound_speed_sq(e, eps, n);
            CHECK(cs2 > 0);
            CHECK(cs2 < 1);
        }
    }
}

TEST_CASE("pressure inversion") {
    const EosSpec win =
        EosSpec::anomalous_window(1.0 / 3.0, 1.0 / 3.0 - 0.017, 5.0, 6.2, 0.5);
    for (const double eps : {0.5, 3.0, 5.5, 6.0, 9.0}) {
        const double p = pressure(win, eps, 1.0);
        CHECK(eps_from_pressure(win, p, 1.0) ==
              doctest::Approx(eps).epsilon(1e-10));
    }
    CHECK(eps_from_pressure(EosSpec::linear(0.25), 1.0, 1.0) ==
          doctest::Approx(4.0).epsilon(1e-14));
}
