#include "rmhd/phaseplane.hpp"

#include <cmath>
#include <optional>

namespace rmhd {

double f1(const UpstreamConstants& c, PhasePoint pt) {
    const FluidState s = reconstruct_state(c, pt);
    const double y = pt.y;
    const double Hu = minkowski_dot(c.H, s.u);
    const double HH = minkowski_dot(c.H, c.H);
    const double T0u = c.T10 * s.u[0] - c.T11 * y - c.T12 * s.u[2];
    return s.p - (c.T11 + c.m * Hu * Hu - T0u * y) / (1 + y * y) +
           c.m / (2 * y * y) * (Hu * Hu - HH);
}

double f2(const UpstreamConstants& c, PhasePoint pt) {
    const FluidState s = reconstruct_state(c, pt);
    const double y = pt.y, u2 = s.u[2];
    const double Hu = minkowski_dot(c.H, s.u);
    const double opy2 = 1 + y * y;
    return ((c.T10 * s.u[0] - c.T12 * u2) * u2 * y - c.m * u2 * Hu * Hu) /
               (y * std::pow(opy2, 2.5)) +
           (c.m * c.H[2] * Hu - c.T12 * y) / (std::pow(opy2, 1.5) * y);
}

double f1_flux(const UpstreamConstants& c, PhasePoint pt) {
    const Tensor4 T = stress_energy(reconstruct_state(c, pt));
    return (T[1][1] - c.T11) / (1 + pt.y * pt.y);
}

double f2_flux(const UpstreamConstants& c, PhasePoint pt) {
    const FluidState s = reconstruct_state(c, pt);
    const Tensor4 T = stress_energy(s);
    const double opy2 = 1 + pt.y * pt.y;
    return (pt.y * s.u[2] * (c.T11 - T[1][1]) / opy2 - (c.T12 - T[1][2])) /
           std::pow(opy2, 1.5);
}

namespace {

using Eval = std::optional<double>;

Eval try_eval(const UpstreamConstants& c, Locus::Which which, double indep,
              double dep) {
    const PhasePoint pt = which == Locus::Which::V1 ? PhasePoint{indep, dep}
                                                    : PhasePoint{dep, indep};
    try {
        return which == Locus::Which::V1 ? f1(c, pt) : f2(c, pt);
    } catch (const UnphysicalPoint&) {
        return std::nullopt;
    } catch (const NonPositiveInput&) {
        return std::nullopt;
    }
}

// Brent's method on [a, b] with fa*fb < 0.
double brent(const UpstreamConstants& c, Locus::Which which, double indep,
             double a, double b, double fa, double fb) {
    double fc = fa, cc = a, d = b - a, e = d;
    for (int it = 0; it < 200; ++it) {
        if (fb * fc > 0) { cc = a; fc = fa; d = e = b - a; }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = cc; cc = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2 * 1e-16 * std::abs(b) + 1e-15;
        const double xm = 0.5 * (cc - b);
        if (std::abs(xm) <= tol || fb == 0) return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q, r, ss = fb / fa;
            if (a == cc) {
                p = 2 * xm * ss;
                q = 1 - ss;
            } else {
                q = fa / fc; r = fb / fc;
                p = ss * (2 * xm * q * (q - r) - (b - a) * (r - 1));
                q = (q - 1) * (r - 1) * (ss - 1);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2 * p < std::min(3 * xm * q - std::abs(tol * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else { d = xm; e = d; }
        } else { d = xm; e = d; }
        a = b; fa = fb;
        b += std::abs(d) > tol ? d : (xm > 0 ? tol : -tol);
        const Eval f = try_eval(c, which, indep, b);
        if (!f) throw BracketNotFound("root iteration left the physical region");
        fb = *f;
    }
    return b;
}

// One continuation step: root of F(indep, .) near `near`, searched with an
// adaptive bracket that widens on failure (clamped to [lo, hi]).
double continue_root(const UpstreamConstants& c, Locus::Which which,
                     double indep, double near, double lo, double hi) {
    double w = std::max(0.02 * std::max(std::abs(near), 0.1), 1e-5);
    for (int attempt = 0; attempt < 48; ++attempt, w *= 1.6) {
        const double a = std::max(near - w, lo), b = std::min(near + w, hi);
        if (!(a < b)) continue;
        const Eval fa = try_eval(c, which, indep, a);
        const Eval fb = try_eval(c, which, indep, b);
        if (fa && fb && *fa * *fb < 0)
            return brent(c, which, indep, a, b, *fa, *fb);
        if (a == lo && b == hi) break;
    }
    throw BracketNotFound("no sign change bracketing the locus continuation");
}

void scan_multivalued(const UpstreamConstants& c, double y, double lo,
                      double hi) {
    constexpr int kScan = 64;
    int flips = 0;
    Eval prev;
    for (int k = 0; k <= kScan; ++k) {
        const double v = lo + (hi - lo) * k / kScan;
        const Eval f = try_eval(c, Locus::Which::V1, y, v);
        if (f && prev && *f * *prev < 0) ++flips;
        prev = f;
    }
    if (flips >= 2)
        throw MultiValued("V1 has disjoint root brackets at y = " +
                          std::to_string(y));
}

} // namespace

Locus trace_locus(const UpstreamConstants& c, Locus::Which which, double lo,
                  double hi, PhasePoint seed, const TraceOptions& opt) {
    if (!(lo < hi) || opt.grid_n < 2)
        throw SolverFailure("bad locus trace range");
    const bool v1 = which == Locus::Which::V1;
    const double seed_indep = v1 ? seed.y : seed.v;
    const double seed_dep = v1 ? seed.v : seed.y;
    const int N = opt.grid_n;
    auto node = [&](int i) { return lo + (hi - lo) * i / (N - 1); };
    int i0 = 0;
    for (int i = 1; i < N; ++i)
        if (std::abs(node(i) - seed_indep) < std::abs(node(i0) - seed_indep))
            i0 = i;

    std::vector<PhasePoint> pts(N);
    auto solve_dir = [&](int from, int to, int stride) {
        double dep = seed_dep;
        for (int i = from; i != to; i += stride) {
            dep = continue_root(c, which, node(i), dep, opt.other_lo, opt.other_hi);
            pts[i] = v1 ? PhasePoint{node(i), dep} : PhasePoint{dep, node(i)};
            if (v1 && opt.detect_multivalued)
                scan_multivalued(c, node(i), opt.other_lo, opt.other_hi);
        }
    };
    solve_dir(i0, N, 1);
    solve_dir(i0 - 1, -1, -1);
    return Locus{which, std::move(pts)};
}

namespace {

RestPointClassification classify(double J[2][2], PhasePoint pt) {
    RestPointClassification rc;
    rc.point = pt;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rc.jac[i][j] = J[i][j];
    rc.det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double scale =
        std::abs(J[0][0] * J[1][1]) + std::abs(J[0][1] * J[1][0]);
    if (std::abs(rc.det) < 1e-8 * std::max(scale, 1e-300)) {
        rc.kind = RestPointClassification::Kind::Degenerate;
    } else if (rc.det < 0) {
        rc.kind = RestPointClassification::Kind::Saddle;
    } else {
        const double tr = J[0][0] + J[1][1];
        rc.kind = tr * tr - 4 * rc.det >= 0 ? RestPointClassification::Kind::Node
                                            : RestPointClassification::Kind::Focus;
    }
    return rc;
}

} // namespace

RestPointClassification jacobian_at_zero(const UpstreamConstants& c,
                                         PhasePoint at) {
    if (std::abs(at.v) > 1e-9)
        throw SolverFailure("jacobian_at_zero requires v = 0");
    const FluidState s = reconstruct_state(c, {at.y, 0});
    const LocalParams lp = local_params(s, c.eos);
    const double y = at.y, u0 = s.u[0], w = lp.p + lp.eps;
    const double u04 = u0 * u0 * u0 * u0;
    double J[2][2];
    J[0][0] = w * d_polynomial(y, lp) / (y * u04);
    J[0][1] = lp.m * lp.h1 * lp.h2 / (u0 * y);
    J[1][0] = lp.m * lp.h1 * lp.h2 / (u04 * u0 * y);
    J[1][1] = rstar_polynomial(y, lp) / (u04 * y);
    return classify(J, at);
}

RestPointClassification jacobian_at_point(const UpstreamConstants& c,
                                          PhasePoint pt) {
    // Finite differences in the original frame.
    const double hy = 1e-6 * std::max(1.0, std::abs(pt.y));
    const double hv = 1e-6 * std::max(1.0, std::abs(pt.v));
    double Jfd[2][2];
    Jfd[0][0] = (f1(c, {pt.y + hy, pt.v}) - f1(c, {pt.y - hy, pt.v})) / (2 * hy);
    Jfd[0][1] = (f1(c, {pt.y, pt.v + hv}) - f1(c, {pt.y, pt.v - hv})) / (2 * hv);
    Jfd[1][0] = (f2(c, {pt.y + hy, pt.v}) - f2(c, {pt.y - hy, pt.v})) / (2 * hy);
    Jfd[1][1] = (f2(c, {pt.y, pt.v + hv}) - f2(c, {pt.y, pt.v - hv})) / (2 * hv);
    RestPointClassification rc = classify(Jfd, pt);

    // Analytic classification in the frame where the transverse velocity
    // vanishes (Lemma 2 proof).
    const FluidState s = reconstruct_state(c, pt);
    const FluidState b = boost_to_zero_transverse(s).state;
    const UpstreamConstants cb = upstream_constants(b, c.eos);
    const RestPointClassification rb = jacobian_at_zero(cb, {b.u[1], 0});
    if (rb.kind != RestPointClassification::Kind::Degenerate &&
        rc.kind != RestPointClassification::Kind::Degenerate &&
        (rb.det < 0) != (rc.det < 0))
        throw SolverFailure("boosted analytic and finite-difference Jacobians "
                            "disagree on det sign");
    rc.kind = rb.kind;
    return rc;
}

LocalExpansionReport local_expansion_checks(const UpstreamConstants& c,
                                            PhasePoint at_zero) {
    const double y0 = at_zero.y;
    const FluidState s = reconstruct_state(c, {y0, 0});
    const LocalParams lp = local_params(s, c.eos);
    if (lp.h1 * lp.h2 == 0)
        throw DegenerateField("local expansions require h1 h2 != 0");
    const double u0 = s.u[0], w = lp.p + lp.eps;
    const double Q = q_polynomial(y0, lp);
    const double R = rstar_polynomial(y0, lp);
    const double D = d_polynomial(y0, lp);
    const double mhh = lp.m * lp.h1 * lp.h2;

    LocalExpansionReport rep{};
    rep.eq23_coeff_analytic = w * w * Q / (y0 * R);
    rep.eq24_slope_analytic = -mhh / (u0 * R);
    rep.eq25_coeff_analytic = -w * w * Q / (mhh * y0 * u0 * u0 * u0);
    rep.eq26_ratio_q_form = w * w * u0 * u0 * Q / (mhh * mhh) + 1;
    rep.eq26_ratio_rd_form = w * R * D / (mhh * u0) / (mhh * u0);

    // Points on V2 at v = +-dv: F1 there and the chord slope give Eq. 23/24;
    // points on V1 at y = y0 +- dy give Eq. 25 and tan(alpha_1).
    auto v2_probe = [&](double dv, double& coeff, double& slope) {
        double cs = 0, sl = 0;
        for (const double v : {dv, -dv}) {
            const double y = continue_root(c, Locus::Which::V2, v, y0,
                                           0.2 * y0, 3 * y0);
            cs += 0.5 * f1(c, {y, v}) / (y - y0);
            sl += 0.5 * v / (y - y0);
        }
        coeff = cs;
        slope = sl;
    };
    auto v1_probe = [&](double dy, double& coeff, double& slope) {
        double cs = 0, sl = 0;
        for (const double y : {y0 + dy, y0 - dy}) {
            const double v = continue_root(c, Locus::Which::V1, y, 0, -0.5, 0.5);
            cs += 0.5 * f2(c, {y, v}) / (y - y0);
            sl += 0.5 * v / (y - y0);
        }
        coeff = cs;
        slope = sl;
    };
    // Richardson in the offset (error is O(d) for one-sided curvature terms;
    // the symmetric +- average kills the leading term, extrapolation cleans
    // the next one).
    double c23a, s24a, c23b, s24b, c25a, s1a, c25b, s1b;
    v2_probe(1e-3, c23a, s24a);
    v2_probe(5e-4, c23b, s24b);
    v1_probe(1e-3, c25a, s1a);
    v1_probe(5e-4, c25b, s1b);
    rep.eq23_coeff_measured = 2 * c23b - c23a;
    rep.eq24_slope_measured = 2 * s24b - s24a;
    rep.eq25_coeff_measured = 2 * c25b - c25a;
    const double tan1 = 2 * s1b - s1a;
    rep.eq26_ratio_measured = tan1 / rep.eq24_slope_measured;
    rep.v1_above_v2 = rep.eq26_ratio_q_form > 1;
    return rep;
}

} // namespace rmhd
