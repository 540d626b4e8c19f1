#pragma once

#include "rmhd/errors.hpp"

namespace rmhd {

// Equation of state p = p(eps, n).  Two families:
//  - Linear:          p = kappa * eps
//  - AnomalousWindow: p = kappa(eps) * eps where kappa dips smoothly from
//    kappa_out to kappa_in inside [eps_lo, eps_hi] (C^1 via smoothstep).
//    Produces non-convex adiabats, the setting in which rarefaction shocks
//    become possible.
struct EosSpec {
    enum class Kind { Linear, AnomalousWindow };
    Kind kind = Kind::Linear;

    double kappa = 1.0 / 3.0; // Linear

    // AnomalousWindow
    double kappa_out = 0, kappa_in = 0;
    double eps_lo = 0, eps_hi = 0;
    double smoothing_width = 0;

    static EosSpec linear(double kappa);
    static EosSpec anomalous_window(double kappa_out, double kappa_in,
                                    double eps_lo, double eps_hi,
                                    double smoothing_width);
};

// Throws ValidationError if the spec violates its invariants.
void validate(const EosSpec& eos);

double pressure(const EosSpec& eos, double eps, double n);

// Isentropic sound speed squared: (dp/deps)_n + (n/(p+eps)) (dp/dn)_eps.
double sound_speed_sq(const EosSpec& eos, double eps, double n);

// Entropy per baryon, normalized so S(eps=1, n=1) = 0.
// Consistent with T dS = p d(1/n) + d(eps/n).
double entropy_per_baryon(const EosSpec& eos, double eps, double n);

// Inverse of pressure in eps at fixed n (monotone for any valid spec).
double eps_from_pressure(const EosSpec& eos, double p, double n);

} // namespace rmhd
