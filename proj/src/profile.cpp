#include "rmhd/profile.hpp"

#include <algorithm>
#include <cmath>

namespace rmhd {

std::pair<double, double> rhs(const UpstreamConstants& c,
                              const ViscosityPair& visc, PhasePoint pt) {
    if (!(visc.xi > 0) || !(visc.eta > 0))
        throw SolverFailure("viscosity coefficients must be positive");
    return {f1(c, pt) / (visc.xi + 4.0 / 3.0 * visc.eta),
            f2(c, pt) / visc.eta};
}

namespace {

struct Vec2 {
    double y, v;
};

double dist(PhasePoint a, PhasePoint b) {
    return std::hypot(a.y - b.y, a.v - b.v);
}

ProfileSample sample_at(const UpstreamConstants& c, double x, PhasePoint pt) {
    const FluidState s = reconstruct_state(c, pt);
    return {x, pt, s.p, s.eps, s.n,
            entropy_per_baryon(c.eos, s.eps, s.n)};
}

// Eigenvector of the viscosity-scaled Jacobian at a saddle, for the
// eigenvalue selected by `unstable`.
Vec2 saddle_eigenvector(const UpstreamConstants& c, const ViscosityPair& visc,
                        PhasePoint at, bool unstable) {
    const double hy = 1e-7 * std::max(1.0, std::abs(at.y));
    const double hv = 1e-7 * std::max(1.0, std::abs(at.v));
    const double s1 = 1.0 / (visc.xi + 4.0 / 3.0 * visc.eta);
    const double s2 = 1.0 / visc.eta;
    double J[2][2];
    J[0][0] = s1 * (f1(c, {at.y + hy, at.v}) - f1(c, {at.y - hy, at.v})) / (2 * hy);
    J[0][1] = s1 * (f1(c, {at.y, at.v + hv}) - f1(c, {at.y, at.v - hv})) / (2 * hv);
    J[1][0] = s2 * (f2(c, {at.y + hy, at.v}) - f2(c, {at.y - hy, at.v})) / (2 * hy);
    J[1][1] = s2 * (f2(c, {at.y, at.v + hv}) - f2(c, {at.y, at.v - hv})) / (2 * hv);
    const double tr = J[0][0] + J[1][1];
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (!(det < 0))
        throw SolverFailure("shooting start point is not a saddle");
    const double disc = std::sqrt(tr * tr - 4 * det);
    const double lam = unstable ? 0.5 * (tr + disc) : 0.5 * (tr - disc);
    // (J - lam I) w = 0; pick the better-conditioned row.
    Vec2 w1{J[0][1], lam - J[0][0]};
    Vec2 w2{lam - J[1][1], J[1][0]};
    Vec2 w = std::hypot(w1.y, w1.v) > std::hypot(w2.y, w2.v) ? w1 : w2;
    const double norm = std::hypot(w.y, w.v);
    if (!(norm > 0)) throw SolverFailure("degenerate eigenvector");
    return {w.y / norm, w.v / norm};
}

// Cash-Karp 4(5) embedded pair.
constexpr double kA[6][5] = {
    {},
    {1. / 5},
    {3. / 40, 9. / 40},
    {3. / 10, -9. / 10, 6. / 5},
    {-11. / 54, 5. / 2, -70. / 27, 35. / 27},
    {1631. / 55296, 175. / 512, 575. / 13824, 44275. / 110592, 253. / 4096}};
constexpr double kB5[6] = {37. / 378,     0, 250. / 621,
                           125. / 594,    0, 512. / 1771};
constexpr double kB4[6] = {2825. / 27648,  0,          18575. / 48384,
                           13525. / 55296, 277. / 14336, 1. / 4};

} // namespace

ProfileTrajectory shoot_profile(const UpstreamConstants& c,
                                const ViscosityPair& visc, PhasePoint from,
                                PhasePoint to, ShockRegime regime, double tol,
                                double delta) {
    if (regime == ShockRegime::NotEvolutionary)
        throw SolverFailure("cannot shoot a non-evolutionary transition");
    const bool backward = regime == ShockRegime::Fast; // saddle is at "1"
    const PhasePoint saddle = backward ? to : from;
    const PhasePoint target = backward ? from : to;
    const double diam = dist(from, to);

    Vec2 w = saddle_eigenvector(c, visc, saddle, /*unstable=*/!backward);
    // Orient into the corridor (toward the other rest point).
    if (w.y * (target.y - saddle.y) + w.v * (target.v - saddle.v) < 0) {
        w.y = -w.y;
        w.v = -w.v;
    }
    PhasePoint pt{saddle.y + delta * diam * w.y, saddle.v + delta * diam * w.v};

    const double sgn = backward ? -1.0 : 1.0;
    auto g = [&](PhasePoint q) {
        auto [gy, gv] = rhs(c, visc, q);
        return Vec2{sgn * gy, sgn * gv};
    };

    const double atol = 1e-3 * tol;
    ProfileTrajectory traj;
    traj.direction = backward ? ProfileDirection::BackwardFrom1
                              : ProfileDirection::ForwardFrom0;
    double x = 0;
    traj.points.push_back(sample_at(c, x, pt));

    const Vec2 g0 = g(pt);
    const double xscale = diam / std::max(std::hypot(g0.y, g0.v), 1e-300);
    double h = 1e-4 * xscale;
    const double hfloor = 1e-14 * xscale;

    for (long step = 0; step < 2000000; ++step) {
        const double d = dist(pt, target);
        if (d <= 10 * tol) {
            traj.connected = true;
            traj.endpoint_distance = d;
            break;
        }
        // Corridor-exit guard.
        if (dist(pt, from) > 4 * diam || dist(pt, to) > 4 * diam)
            throw NotConnected("trajectory left the corridor", pt.y, pt.v);

        Vec2 k[6];
        bool physical = true;
        try {
            k[0] = g(pt);
            for (int i = 1; i < 6; ++i) {
                PhasePoint q = pt;
                for (int j = 0; j < i; ++j) {
                    q.y += h * kA[i][j] * k[j].y;
                    q.v += h * kA[i][j] * k[j].v;
                }
                k[i] = g(q);
            }
        } catch (const UnphysicalPoint&) {
            physical = false;
        }
        if (!physical) {
            h *= 0.5;
            if (h < hfloor) throw StiffnessLimit("step underflow (unphysical region)");
            continue;
        }
        Vec2 y5{pt.y, pt.v}, y4{pt.y, pt.v}, errv{0, 0};
        for (int i = 0; i < 6; ++i) {
            y5.y += h * kB5[i] * k[i].y;
            y5.v += h * kB5[i] * k[i].v;
            y4.y += h * kB4[i] * k[i].y;
            y4.v += h * kB4[i] * k[i].v;
        }
        errv.y = std::abs(y5.y - y4.y) / (atol + tol * std::abs(y5.y));
        errv.v = std::abs(y5.v - y4.v) / (atol + tol * std::abs(y5.v));
        const double err = std::max(errv.y, errv.v);
        if (err <= 1.0) {
            x += h;
            pt = PhasePoint{y5.y, y5.v};
            traj.points.push_back(sample_at(c, x, pt));
        }
        const double fac = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
        if (h < hfloor) throw StiffnessLimit("adaptive step hit the floor");
    }
    if (!traj.connected)
        throw NotConnected("step budget exhausted before reaching the target",
                           pt.y, pt.v);

    if (backward) {
        // The integration variable was s = -x; restore physical x and
        // restore increasing order.
        for (auto& s : traj.points) s.x = -s.x;
        std::reverse(traj.points.begin(), traj.points.end());
    }
    // Normalize x to start at 0.
    const double x0 = traj.points.front().x;
    for (auto& s : traj.points) s.x -= x0;
    return traj;
}

namespace {

// Interpolated locus lookup: V1 gives v(y), V2 gives y(v).
double locus_interp(const Locus& L, double at) {
    const auto& S = L.samples;
    const bool v1 = L.which == Locus::Which::V1;
    auto key = [&](const PhasePoint& p) { return v1 ? p.y : p.v; };
    auto val = [&](const PhasePoint& p) { return v1 ? p.v : p.y; };
    if (S.size() < 2) throw SolverFailure("locus too short");
    size_t lo = 0, hi = S.size() - 1;
    if (at <= key(S[lo])) return val(S[lo]);
    if (at >= key(S[hi])) return val(S[hi]);
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (key(S[mid]) <= at ? lo : hi) = mid;
    }
    const double t = (at - key(S[lo])) / (key(S[hi]) - key(S[lo]));
    return val(S[lo]) + t * (val(S[hi]) - val(S[lo]));
}

double point_segment_dist(PhasePoint p, PhasePoint a, PhasePoint b) {
    const double dx = b.y - a.y, dy = b.v - a.v;
    const double L2 = dx * dx + dy * dy;
    double t = L2 > 0 ? ((p.y - a.y) * dx + (p.v - a.v) * dy) / L2 : 0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.y - (a.y + t * dx), p.v - (a.v + t * dy));
}

double dist_to_locus(PhasePoint p, const Locus& L) {
    double best = INFINITY;
    for (size_t i = 0; i + 1 < L.samples.size(); ++i)
        best = std::min(best, point_segment_dist(p, L.samples[i], L.samples[i + 1]));
    return best;
}

} // namespace

CrossingReport crossing_direction_checks(const UpstreamConstants& c,
                                         const ProfileTrajectory& traj,
                                         const Locus& v1, const Locus& v2) {
    CrossingReport rep;
    if (traj.points.size() < 2) return rep;
    const PhasePoint p0 = traj.points.front().pt;
    const PhasePoint p1 = traj.points.back().pt;
    const FluidState s0 = reconstruct_state(c, p0);
    const double sgn_hh = s0.h[1] * s0.h[2] > 0 ? 1.0 : -1.0;
    const double sgn_dy = p0.y - p1.y > 0 ? 1.0 : -1.0;

    for (size_t i = 0; i + 1 < traj.points.size(); ++i) {
        const PhasePoint a = traj.points[i].pt, b = traj.points[i + 1].pt;
        // V2 crossing: y - Y2(v) changes sign.  Stated direction: right to
        // left, i.e. y decreasing (for y1 < y0; flipped for rarefaction).
        const double ga = a.y - locus_interp(v2, a.v);
        const double gb = b.y - locus_interp(v2, b.v);
        if (ga * gb < 0) {
            ++rep.crossings;
            if ((b.y - a.y) * (-sgn_dy) < 0) ++rep.violations;
        }
        // V1 crossing: v - V1(y) changes sign.  Stated direction: bottom-up
        // for h1 h2 > 0, y1 < y0; flips with either sign.
        const double fa = a.v - locus_interp(v1, a.y);
        const double fb = b.v - locus_interp(v1, b.y);
        if (fa * fb < 0) {
            ++rep.crossings;
            if ((b.v - a.v) * sgn_hh * sgn_dy < 0) ++rep.violations;
        }
    }
    return rep;
}

std::vector<SweepEntry> viscosity_ratio_sweep(const UpstreamConstants& c,
                                              const std::vector<double>& ratios,
                                              double base_xi, double tol,
                                              PhasePoint from, PhasePoint to,
                                              ShockRegime regime,
                                              const Locus& v2, double delta) {
    std::vector<SweepEntry> out;
    const double diam = dist(from, to);
    for (const double r : ratios) {
        SweepEntry e;
        e.ratio = r;
        e.traj = shoot_profile(c, ViscosityPair{base_xi, r * base_xi}, from, to,
                               regime, tol, delta);
        e.max_distance_to_v2 = 0;
        e.max_slope = 0;
        const auto& P = e.traj.points;
        for (size_t i = 0; i < P.size(); ++i) {
            const PhasePoint p = P[i].pt;
            // Tracking segment: away from both rest points.
            if (dist(p, from) > 0.1 * diam && dist(p, to) > 0.1 * diam)
                e.max_distance_to_v2 =
                    std::max(e.max_distance_to_v2, dist_to_locus(p, v2));
            if (i > 0) {
                const double dy = p.y - P[i - 1].pt.y;
                const double dv = p.v - P[i - 1].pt.v;
                if (std::abs(dy) > 1e-13 * diam)
                    e.max_slope = std::max(e.max_slope, std::abs(dv / dy));
            }
        }
        e.jump_detected = false;
        out.push_back(std::move(e));
    }
    // Jump diagnostic: slope blow-up relative to the first (largest) ratio.
    if (out.size() > 1)
        for (size_t i = 1; i < out.size(); ++i)
            out[i].jump_detected = out[i].max_slope >= 10 * out[0].max_slope;
    return out;
}

} // namespace rmhd
