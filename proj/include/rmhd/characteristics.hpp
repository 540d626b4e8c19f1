#pragma once

#include "rmhd/covariant.hpp"

namespace rmhd {

// Local thermodynamic/field parameters entering the characteristic
// polynomials.  A plain record (not a FluidState) so the same code serves
// the point "0", the point "1" and arbitrary phase-plane points.
struct LocalParams {
    double p = 0, eps = 0;
    double cs2 = 0;      // sound speed squared
    double hsq = 0;      // |h|^2 = -h.h
    double h0 = 0, h1 = 0, h2 = 0;
    double m = 1;        // mu/4pi
};

LocalParams local_params(const FluidState& s, const EosSpec& eos);

// Q(y) = (1-cs2) y^4 - y^2 (cs2 + m|h|^2/(p+eps)) + m cs2 (h1)^2/(p+eps).
// Roots in y are the slow and fast magnetosonic proper speeds (Eq. 19).
double q_polynomial(double y, const LocalParams& lp);

// R*(y) = (p+eps) y^2 (1+y^2) - m (h1)^2  (Eq. 21).
double rstar_polynomial(double y, const LocalParams& lp);

// D(y) = (1-cs2) y^4 - y^2 (2 cs2 + m|h|^2/(p+eps) - 1)
//        + m[(h0)^2-(h2)^2]/(p+eps) - cs2.
// Only meaningful in a frame with u2 = 0 (it mixes h0 and h2 components);
// callers must boost first.
double d_polynomial(double y, const LocalParams& lp);

struct CharacteristicSpeeds {
    double u_sl = 0, u_A = 0, u_A_star = 0, u_f = 0;
};

// Closed-form roots of Q (quadratic in y^2), Alfven speed (Eq. 20) and the
// positive root of R* (Eq. 21).  When Q has no real roots in y^2 (possible
// for shock-frame parameters with |h|^2 < (h1)^2) both u_sl and u_f are
// returned equal at the vertex of the parabola (degenerate-root treatment).
CharacteristicSpeeds characteristic_speeds(const LocalParams& lp);

enum class ShockRegime { Fast, Slow, NotEvolutionary };
const char* to_string(ShockRegime r);

// Condition D: Fast iff u1 > u_f, Slow iff u_sl < u1 < u_A, else
// NotEvolutionary.  Evaluated at the given (upstream) state.
ShockRegime classify_regime(const FluidState& upstream, const EosSpec& eos);

} // namespace rmhd
