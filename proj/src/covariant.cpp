#include "rmhd/covariant.hpp"

#include <cmath>

namespace rmhd {

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

double h_norm_sq(const FluidState& s) { return -minkowski_dot(s.h, s.h); }

void validate(const FluidState& s, double tol) {
    if (std::abs(minkowski_dot(s.u, s.u) - 1.0) > tol)
        throw InvalidState("u.u != 1");
    if (std::abs(minkowski_dot(s.h, s.u)) > tol)
        throw InvalidState("h.u != 0");
    if (!(s.u[1] > 0)) throw InvalidState("u1 must be positive");
    if (s.u[3] != 0 || s.h[3] != 0)
        throw InvalidState("planar symmetry requires u3 = h3 = 0");
}

FluidState make_fluid_state_eps(double u1, double u2, double h1, double h2,
                                double n, double eps, const EosSpec& eos,
                                double mu_over_4pi) {
    FluidState s;
    const double u0 = std::sqrt(1 + u1 * u1 + u2 * u2);
    s.u = FourVector{{u0, u1, u2, 0}};
    s.h = FourVector{{(h1 * u1 + h2 * u2) / u0, h1, h2, 0}};
    s.n = n;
    s.eps = eps;
    s.p = pressure(eos, eps, n);
    s.mu_over_4pi = mu_over_4pi;
    validate(s);
    return s;
}

FluidState make_fluid_state_p(double u1, double u2, double h1, double h2,
                              double n, double p, const EosSpec& eos,
                              double mu_over_4pi) {
    return make_fluid_state_eps(u1, u2, h1, h2, n,
                                eps_from_pressure(eos, p, n), eos, mu_over_4pi);
}

Tensor4 stress_energy(const FluidState& s) {
    validate(s, 1e-9);
    const double hsq = h_norm_sq(s);
    const double ps = s.p + 0.5 * s.mu_over_4pi * hsq;
    const double es = s.eps + 0.5 * s.mu_over_4pi * hsq;
    static const double g[4] = {1, -1, -1, -1};
    Tensor4 T{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            // Grouped so T is bitwise symmetric.
            T[mu][nu] = (ps + es) * (s.u[mu] * s.u[nu]) -
                        s.mu_over_4pi * (s.h[mu] * s.h[nu]);
            if (mu == nu) T[mu][nu] -= ps * g[mu];
        }
    return T;
}

BoostResult boost_to_zero_transverse(const FluidState& s) {
    const double beta = s.u[2] / s.u[0];
    const double gamma = 1.0 / std::sqrt(1 - beta * beta);
    auto boost = [&](const FourVector& a) {
        return FourVector{{gamma * (a[0] - beta * a[2]), a[1],
                           gamma * (a[2] - beta * a[0]), a[3]}};
    };
    FluidState out = s;
    out.u = boost(s.u);
    out.h = boost(s.h);
    out.u[2] = 0; // exact by construction; kill roundoff
    return BoostResult{out, beta};
}

} // namespace rmhd
