#pragma once

#include <array>

#include "rmhd/eos.hpp"
#include "rmhd/errors.hpp"

namespace rmhd {

// Contravariant four-vector, flat metric diag(1,-1,-1,-1).
struct FourVector {
    std::array<double, 4> c{0, 0, 0, 0};
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }
};

double minkowski_dot(const FourVector& a, const FourVector& b);

using Tensor4 = std::array<std::array<double, 4>, 4>;

// Full fluid state at a point; mu_over_4pi is the magnetic coupling mu/4pi
// (the paper only ever uses mu in the combinations mu/4pi and mu/8pi).
struct FluidState {
    FourVector u; // four-velocity, u.u = 1
    FourVector h; // magnetic field four-vector, h.u = 0
    double n = 0, p = 0, eps = 0;
    double mu_over_4pi = 1;
};

// |h|^2 = -h.h  (positive for nonzero h).
double h_norm_sq(const FluidState& s);

// Throws InvalidState if u.u != 1, h.u != 0, u1 <= 0 or planarity is broken.
void validate(const FluidState& s, double tol = 1e-10);

// Completes u0 = sqrt(1+(u1)^2+(u2)^2) and h0 from h.u = 0.
FluidState make_fluid_state_eps(double u1, double u2, double h1, double h2,
                                double n, double eps, const EosSpec& eos,
                                double mu_over_4pi);
FluidState make_fluid_state_p(double u1, double u2, double h1, double h2,
                              double n, double p, const EosSpec& eos,
                              double mu_over_4pi);

// T^{mu nu} = (p*+eps*) u^mu u^nu - p* g^{mu nu} - (mu/4pi) h^mu h^nu,
// p* = p + (mu/8pi)|h|^2, eps* = eps + (mu/8pi)|h|^2.
Tensor4 stress_energy(const FluidState& s);

struct BoostResult {
    FluidState state;
    double beta; // boost velocity along axis 2
};

// Frame change along axis 2 making u2 = 0 while preserving u1.
BoostResult boost_to_zero_transverse(const FluidState& s);

} // namespace rmhd
