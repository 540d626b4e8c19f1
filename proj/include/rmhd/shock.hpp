#pragma once

#include <utility>
#include <vector>

#include "rmhd/characteristics.hpp"
#include "rmhd/covariant.hpp"

namespace rmhd {

// Conserved fluxes fixed by the state ahead of the shock (Eqs. 5-7):
// T0^{1nu}, H^nu = u0^1 h0^nu - h0^1 u0^nu, J = n0 u0^1.
struct UpstreamConstants {
    double T10 = 0, T11 = 0, T12 = 0;
    FourVector H;
    double J = 0;
    double m = 1; // mu/4pi
    EosSpec eos;
};

// Reduced coordinates of the dynamical system: y = u1, v = u2/sqrt(1+y^2).
struct PhasePoint {
    double y = 0, v = 0;
};

// Requires a frame with u2 = 0 (apply boost_to_zero_transverse first).
UpstreamConstants upstream_constants(const FluidState& upstream,
                                     const EosSpec& eos);

// Inverts the conservation laws at a phase point (Eqs. 7, 11, 12):
// h^mu = [H^mu - u^mu (H.u)]/u1, eps* = T0^{1mu} u_mu / u1, n = J/y.
// Throws UnphysicalPoint if eps <= 0 or n <= 0 there.
FluidState reconstruct_state(const UpstreamConstants& c, PhasePoint pt);

struct SearchBox {
    double y_lo, y_hi, v_lo, v_hi;
};

// Simultaneous zeros of (F1, F2) in the box: sign-change cell scan on a
// grid_n x grid_n lattice, then 2-D Newton polish.  Sorted by (y, v).
std::vector<PhasePoint> find_rest_points(const UpstreamConstants& c,
                                         const SearchBox& box, int grid_n);

// Newton polish of a single candidate; throws SolverFailure.
PhasePoint polish_rest_point(const UpstreamConstants& c, PhasePoint guess);

// Central finite differences of S(reconstruct(.)) wrt y and v.  Both vanish
// at the point "0" (Lemma 1).
std::pair<double, double> entropy_stationarity_check(const UpstreamConstants& c,
                                                     PhasePoint at, double step);

} // namespace rmhd
