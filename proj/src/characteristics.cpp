#include "rmhd/characteristics.hpp"

#include <cmath>

namespace rmhd {

LocalParams local_params(const FluidState& s, const EosSpec& eos) {
    LocalParams lp;
    lp.p = s.p;
    lp.eps = s.eps;
    lp.cs2 = sound_speed_sq(eos, s.eps, s.n);
    lp.hsq = h_norm_sq(s);
    lp.h0 = s.h[0];
    lp.h1 = s.h[1];
    lp.h2 = s.h[2];
    lp.m = s.mu_over_4pi;
    return lp;
}

double q_polynomial(double y, const LocalParams& lp) {
    const double w = lp.p + lp.eps;
    const double y2 = y * y;
    return (1 - lp.cs2) * y2 * y2 - y2 * (lp.cs2 + lp.m * lp.hsq / w) +
           lp.m * lp.cs2 * lp.h1 * lp.h1 / w;
}

double rstar_polynomial(double y, const LocalParams& lp) {
    const double y2 = y * y;
    return (lp.p + lp.eps) * y2 * (1 + y2) - lp.m * lp.h1 * lp.h1;
}

double d_polynomial(double y, const LocalParams& lp) {
    const double w = lp.p + lp.eps;
    const double y2 = y * y;
    return (1 - lp.cs2) * y2 * y2 - y2 * (2 * lp.cs2 + lp.m * lp.hsq / w - 1) +
           lp.m * (lp.h0 * lp.h0 - lp.h2 * lp.h2) / w - lp.cs2;
}

CharacteristicSpeeds characteristic_speeds(const LocalParams& lp) {
    const double w = lp.p + lp.eps;
    if (!(w > 0)) throw DegenerateField("p + eps must be positive");
    CharacteristicSpeeds cs;

    // Q as quadratic a (y^2)^2 + b y^2 + c.
    const double a = 1 - lp.cs2;
    const double b = -(lp.cs2 + lp.m * lp.hsq / w);
    const double c = lp.m * lp.cs2 * lp.h1 * lp.h1 / w;
    const double disc = b * b - 4 * a * c;
    if (disc >= 0) {
        const double r = std::sqrt(disc);
        const double hi = (-b + r) / (2 * a);
        const double lo = (-b - r) / (2 * a);
        cs.u_f = std::sqrt(std::max(hi, 0.0));
        cs.u_sl = std::sqrt(std::max(lo, 0.0));
    } else {
        // No real magnetosonic roots (only possible when |h|^2 < (h1)^2,
        // i.e. shock-frame parameters): return the parabola vertex twice.
        cs.u_f = cs.u_sl = std::sqrt(std::max(-b / (2 * a), 0.0));
    }

    cs.u_A = std::sqrt(lp.m * lp.h1 * lp.h1 / (w + lp.m * lp.hsq));

    // R* = 0: y^2 (1+y^2) = k with k = m (h1)^2 / (p+eps).
    const double k = lp.m * lp.h1 * lp.h1 / w;
    cs.u_A_star = std::sqrt((-1 + std::sqrt(1 + 4 * k)) / 2);
    return cs;
}

const char* to_string(ShockRegime r) {
    switch (r) {
        case ShockRegime::Fast: return "Fast";
        case ShockRegime::Slow: return "Slow";
        default: return "NotEvolutionary";
    }
}

ShockRegime classify_regime(const FluidState& upstream, const EosSpec& eos) {
    validate(upstream);
    const LocalParams lp = local_params(upstream, eos);
    const CharacteristicSpeeds cs = characteristic_speeds(lp);
    const double u1 = upstream.u[1];
    if (u1 > cs.u_f && q_polynomial(u1, lp) > 0) return ShockRegime::Fast;
    if (u1 > cs.u_sl && u1 < cs.u_A) return ShockRegime::Slow;
    return ShockRegime::NotEvolutionary;
}

} // namespace rmhd
