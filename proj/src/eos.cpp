#include "rmhd/eos.hpp"

#include <cmath>

namespace rmhd {

EosSpec EosSpec::linear(double kappa) {
    EosSpec e;
    e.kind = Kind::Linear;
    e.kappa = kappa;
    validate(e);
    return e;
}

EosSpec EosSpec::anomalous_window(double kappa_out, double kappa_in,
                                  double eps_lo, double eps_hi,
                                  double smoothing_width) {
    EosSpec e;
    e.kind = Kind::AnomalousWindow;
    e.kappa_out = kappa_out;
    e.kappa_in = kappa_in;
    e.eps_lo = eps_lo;
    e.eps_hi = eps_hi;
    e.smoothing_width = smoothing_width;
    validate(e);
    return e;
}

void validate(const EosSpec& eos) {
    if (eos.kind == EosSpec::Kind::Linear) {
        if (!(eos.kappa > 0 && eos.kappa < 1))
            throw ValidationError("kappa", "requires 0 < kappa < 1 (causality)");
        return;
    }
    if (!(eos.kappa_in > 0 && eos.kappa_in < eos.kappa_out && eos.kappa_out < 1))
        throw ValidationError("kappa_in/kappa_out",
                              "requires 0 < kappa_in < kappa_out < 1");
    if (!(eos.eps_lo < eos.eps_hi))
        throw ValidationError("eps_lo/eps_hi", "requires eps_lo < eps_hi");
    if (!(eos.smoothing_width > 0))
        throw ValidationError("smoothing_width", "must be positive");
}

namespace {

double smoothstep(double t) {
    if (t <= 0) return 0;
    if (t >= 1) return 1;
    return t * t * (3 - 2 * t);
}

double smoothstep_deriv(double t) {
    if (t <= 0 || t >= 1) return 0;
    return 6 * t * (1 - t);
}

// kappa(eps) and its derivative for the window family.
double kappa_of(const EosSpec& e, double eps) {
    if (e.kind == EosSpec::Kind::Linear) return e.kappa;
    const double a = smoothstep((eps - e.eps_lo) / e.smoothing_width);
    const double b = smoothstep((e.eps_hi - eps) / e.smoothing_width);
    return e.kappa_out + (e.kappa_in - e.kappa_out) * a * b;
}

double dkappa_of(const EosSpec& e, double eps) {
    if (e.kind == EosSpec::Kind::Linear) return 0;
    const double w = e.smoothing_width;
    const double ta = (eps - e.eps_lo) / w;
    const double tb = (e.eps_hi - eps) / w;
    const double a = smoothstep(ta), b = smoothstep(tb);
    const double da = smoothstep_deriv(ta) / w;
    const double db = -smoothstep_deriv(tb) / w;
    return (e.kappa_in - e.kappa_out) * (da * b + a * db);
}

void require_positive(double eps, double n) {
    if (!(eps > 0) || !(n > 0))
        throw NonPositiveInput("eps and n must be positive");
}

// Adaptive Simpson for the entropy integral of the window family.
double simpson(const EosSpec& e, double a, double b, double fa, double fm,
               double fb, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    auto f = [&](double x) { return 1.0 / ((1.0 + kappa_of(e, x)) * x); };
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 1e-13 * (1 + std::abs(whole)))
        return left + right + (left + right - whole) / 15;
    return simpson(e, a, m, fa, flm, fm, left, depth - 1) +
           simpson(e, m, b, fm, frm, fb, right, depth - 1);
}

double entropy_integral(const EosSpec& e, double eps) {
    // int_1^eps deps' / ((1+kappa) eps')
    auto f = [&](double x) { return 1.0 / ((1.0 + kappa_of(e, x)) * x); };
    const double a = 1.0, b = eps;
    if (a == b) return 0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson(e, a, b, fa, fm, fb, whole, 48);
}

} // namespace

double pressure(const EosSpec& eos, double eps, double n) {
    require_positive(eps, n);
    return kappa_of(eos, eps) * eps;
}

double sound_speed_sq(const EosSpec& eos, double eps, double n) {
    require_positive(eps, n);
    // p depends on eps only, so (dp/dn)_eps = 0 and
    // cs2 = (dp/deps)_n = kappa + kappa' eps.
    const double cs2 = kappa_of(eos, eps) + dkappa_of(eos, eps) * eps;
    if (!(cs2 > 0) || !(cs2 < 1))
        throw CausalityViolation("sound speed squared outside (0,1)");
    return cs2;
}

double entropy_per_baryon(const EosSpec& eos, double eps, double n) {
    require_positive(eps, n);
    if (eos.kind == EosSpec::Kind::Linear)
        return std::log(eps) / (1.0 + eos.kappa) - std::log(n);
    return entropy_integral(eos, eps) - std::log(n);
}

double eps_from_pressure(const EosSpec& eos, double p, double n) {
    if (!(p > 0) || !(n > 0))
        throw NonPositiveInput("p and n must be positive");
    if (eos.kind == EosSpec::Kind::Linear) return p / eos.kappa;
    // p(eps) is strictly increasing (cs2 > 0); bisect on a bracket.
    double lo = p; // kappa < 1 everywhere, so eps > p
    double hi = p / std::min(eos.kappa_in, eos.kappa_out) + 1.0;
    while (pressure(eos, hi, n) < p) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pressure(eos, mid, n) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace rmhd
