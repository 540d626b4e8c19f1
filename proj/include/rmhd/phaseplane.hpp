#pragma once

#include <vector>

#include "rmhd/shock.hpp"

namespace rmhd {

// Right-hand sides of the shock-structure system (Eqs. 16, 17 as printed).
double f1(const UpstreamConstants& c, PhasePoint pt);
double f2(const UpstreamConstants& c, PhasePoint pt);

// Independent tensor-flux forms derived from Eqs. 13-15 by direct
// evaluation of T^{1nu} at the reconstructed state; used as oracles that
// pin every sign and index reading of Eqs. 16-17:
//   f1 = (T^{11} - T0^{11}) / (1+y^2)
//   f2 = [y u2 (T0^{11}-T^{11})/(1+y^2) - (T0^{12}-T^{12})] / (1+y^2)^{3/2}
double f1_flux(const UpstreamConstants& c, PhasePoint pt);
double f2_flux(const UpstreamConstants& c, PhasePoint pt);

struct Locus {
    enum class Which { V1, V2 };
    Which which;
    // V1 samples ordered in y (v = V1(y)); V2 samples ordered in v
    // (y = Y2(v), single-valued, not necessarily monotone).
    std::vector<PhasePoint> samples;
};

struct TraceOptions {
    int grid_n = 256;
    // Scan window for the dependent coordinate when checking
    // single-valuedness; also limits the continuation search.
    double other_lo = -1.0, other_hi = 1.0;
    // V1 only: scan the whole window at every grid node and fail with
    // MultiValued if two disjoint root brackets exist (condition A detector).
    bool detect_multivalued = false;
};

// Continuation trace of a locus from a seed point (typically a rest point)
// over [lo, hi] in the independent coordinate.  Adaptive bracket width,
// widened before declaring BracketNotFound.
Locus trace_locus(const UpstreamConstants& c, Locus::Which which,
                  double lo, double hi, PhasePoint seed,
                  const TraceOptions& opt = {});

struct RestPointClassification {
    PhasePoint point;
    double jac[2][2]; // d(F1,F2)/d(y,v)
    double det = 0;
    enum class Kind { Saddle, Node, Focus, Degenerate };
    Kind kind = Kind::Degenerate;
};

// Analytic Jacobian at the rest point "0" (v0 = 0), Eqs. (A)-(D):
//   dF1/du1 = (p+eps) D(u1) / (u1 (u0)^4),  dF1/dv = m h1 h2 / (u0 u1),
//   dF2/du1 = m h1 h2 / ((u0)^5 u1),        dF2/dv = R*(u1) / ((u0)^4 u1);
// det = (p+eps)^2 Q(u1) / ((u1)^2 (u0)^4).
RestPointClassification jacobian_at_zero(const UpstreamConstants& c,
                                         PhasePoint at);

// Jacobian at an arbitrary rest point: boost the reconstructed state to
// zero transverse velocity, apply the "0" formulas there; the returned
// matrix/det are finite differences in the original frame, the kind is
// taken from the boosted analytic det (sign agreement asserted).
RestPointClassification jacobian_at_point(const UpstreamConstants& c,
                                          PhasePoint pt);

struct LocalExpansionReport {
    double eq23_coeff_analytic, eq23_coeff_measured;
    double eq24_slope_analytic, eq24_slope_measured;
    double eq25_coeff_analytic, eq25_coeff_measured;
    double eq26_ratio_q_form;  // 16pi^2 (p+eps)^2 (u0)^2 Q / (mu h1 h2)^2 + 1
    double eq26_ratio_rd_form; // 16pi^2 (p+eps) R* D / (mu h1 h2 u0)^2
    double eq26_ratio_measured;
    bool v1_above_v2; // ratio > 1 (fast regime)
};

// First-order expansions near "0" (Eqs. 23-26), measured by
// Richardson-extrapolated finite differences along the traced loci.
LocalExpansionReport local_expansion_checks(const UpstreamConstants& c,
                                            PhasePoint at_zero);

} // namespace rmhd
