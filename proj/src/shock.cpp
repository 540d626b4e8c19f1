#include "rmhd/shock.hpp"

#include <algorithm>
#include <cmath>

#include "rmhd/phaseplane.hpp"

namespace rmhd {

UpstreamConstants upstream_constants(const FluidState& upstream,
                                     const EosSpec& eos) {
    validate(upstream);
    if (std::abs(upstream.u[2]) > 1e-12)
        throw InvalidState("upstream frame must have u2 = 0");
    const Tensor4 T = stress_energy(upstream);
    UpstreamConstants c;
    c.T10 = T[1][0];
    c.T11 = T[1][1];
    c.T12 = T[1][2];
    for (int nu = 0; nu < 4; ++nu)
        c.H[nu] = upstream.u[1] * upstream.h[nu] - upstream.h[1] * upstream.u[nu];
    c.J = upstream.n * upstream.u[1];
    c.m = upstream.mu_over_4pi;
    c.eos = eos;
    return c;
}

FluidState reconstruct_state(const UpstreamConstants& c, PhasePoint pt) {
    const double y = pt.y, v = pt.v;
    if (!(y > 0)) throw UnphysicalPoint("requires y > 0");
    const double u2 = v * std::sqrt(1 + y * y);
    const double u0 = std::sqrt((1 + y * y) * (1 + v * v));
    FluidState s;
    s.u = FourVector{{u0, y, u2, 0}};
    const double Hu = c.H[0] * u0 - c.H[1] * y - c.H[2] * u2;
    for (int nu = 0; nu < 4; ++nu)
        s.h[nu] = (c.H[nu] - s.u[nu] * Hu) / y;
    const double eps_star = (c.T10 * u0 - c.T11 * y - c.T12 * u2) / y;
    s.eps = eps_star - 0.5 * c.m * h_norm_sq(s);
    s.n = c.J / y;
    s.mu_over_4pi = c.m;
    if (!(s.eps > 0) || !(s.n > 0))
        throw UnphysicalPoint("non-positive eps or n at phase point");
    s.p = pressure(c.eos, s.eps, s.n);
    return s;
}

namespace {

// 2-D Newton on (F1, F2) with finite-difference Jacobian.
bool newton(const UpstreamConstants& c, PhasePoint& pt, double fscale) {
    for (int it = 0; it < 60; ++it) {
        double g1, g2;
        try {
            g1 = f1(c, pt);
            g2 = f2(c, pt);
        } catch (const UnphysicalPoint&) {
            return false;
        }
        const double res = std::max(std::abs(g1), std::abs(g2));
        if (res < 1e-12 * fscale) return true;
        const double hy = 1e-7 * std::max(1.0, std::abs(pt.y));
        const double hv = 1e-7 * std::max(1.0, std::abs(pt.v));
        double J[2][2];
        try {
            J[0][0] = (f1(c, {pt.y + hy, pt.v}) - f1(c, {pt.y - hy, pt.v})) / (2 * hy);
            J[0][1] = (f1(c, {pt.y, pt.v + hv}) - f1(c, {pt.y, pt.v - hv})) / (2 * hv);
            J[1][0] = (f2(c, {pt.y + hy, pt.v}) - f2(c, {pt.y - hy, pt.v})) / (2 * hy);
            J[1][1] = (f2(c, {pt.y, pt.v + hv}) - f2(c, {pt.y, pt.v - hv})) / (2 * hv);
        } catch (const UnphysicalPoint&) {
            return false;
        }
        const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        if (det == 0) return false;
        const double dy = (g1 * J[1][1] - g2 * J[0][1]) / det;
        const double dv = (g2 * J[0][0] - g1 * J[1][0]) / det;
        // Damped update: back off while the step leaves the physical region
        // or grows the residual.
        double lam = 1.0;
        bool moved = false;
        for (int k = 0; k < 20; ++k, lam *= 0.5) {
            const PhasePoint trial{pt.y - lam * dy, pt.v - lam * dv};
            if (!(trial.y > 0)) continue;
            try {
                const double t1 = f1(c, trial), t2 = f2(c, trial);
                if (std::max(std::abs(t1), std::abs(t2)) < res || lam == 1.0) {
                    pt = trial;
                    moved = true;
                    break;
                }
            } catch (const UnphysicalPoint&) {
                continue;
            }
        }
        if (!moved) return false;
    }
    double g1, g2;
    try {
        g1 = f1(c, pt);
        g2 = f2(c, pt);
    } catch (const UnphysicalPoint&) {
        return false;
    }
    return std::max(std::abs(g1), std::abs(g2)) < 1e-10 * fscale;
}

} // namespace

PhasePoint polish_rest_point(const UpstreamConstants& c, PhasePoint guess) {
    const double fscale = std::max(1.0, std::abs(c.T11));
    PhasePoint pt = guess;
    if (!newton(c, pt, fscale))
        throw SolverFailure("rest-point Newton did not converge");
    return pt;
}

std::vector<PhasePoint> find_rest_points(const UpstreamConstants& c,
                                         const SearchBox& box, int grid_n) {
    if (grid_n < 32) throw SolverFailure("grid_n must be >= 32");
    const double fscale = std::max(1.0, std::abs(c.T11));
    const int N = grid_n;
    std::vector<double> G1(static_cast<size_t>(N) * N, NAN),
        G2(static_cast<size_t>(N) * N, NAN);
    auto yat = [&](int i) { return box.y_lo + (box.y_hi - box.y_lo) * i / (N - 1); };
    auto vat = [&](int j) { return box.v_lo + (box.v_hi - box.v_lo) * j / (N - 1); };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const PhasePoint pt{yat(i), vat(j)};
            try {
                G1[i * N + j] = f1(c, pt);
                G2[i * N + j] = f2(c, pt);
            } catch (const UnphysicalPoint&) {
            } catch (const NonPositiveInput&) {
            }
        }
    std::vector<PhasePoint> found;
    auto already = [&](PhasePoint p) {
        for (const auto& q : found)
            if (std::hypot(p.y - q.y, p.v - q.v) < 1e-6) return true;
        return false;
    };
    for (int i = 0; i + 1 < N; ++i)
        for (int j = 0; j + 1 < N; ++j) {
            double lo1 = INFINITY, hi1 = -INFINITY, lo2 = INFINITY, hi2 = -INFINITY;
            bool ok = true;
            for (int di = 0; di < 2 && ok; ++di)
                for (int dj = 0; dj < 2; ++dj) {
                    const double a = G1[(i + di) * N + (j + dj)];
                    const double b = G2[(i + di) * N + (j + dj)];
                    if (std::isnan(a) || std::isnan(b)) { ok = false; break; }
                    lo1 = std::min(lo1, a); hi1 = std::max(hi1, a);
                    lo2 = std::min(lo2, b); hi2 = std::max(hi2, b);
                }
            if (!ok || !(lo1 < 0 && hi1 > 0 && lo2 < 0 && hi2 > 0)) continue;
            PhasePoint pt{0.5 * (yat(i) + yat(i + 1)), 0.5 * (vat(j) + vat(j + 1))};
            if (newton(c, pt, fscale) && pt.y > 0 && !already(pt))
                found.push_back(pt);
        }
    std::sort(found.begin(), found.end(), [](PhasePoint a, PhasePoint b) {
        return a.y != b.y ? a.y < b.y : a.v < b.v;
    });
    return found;
}

std::pair<double, double> entropy_stationarity_check(const UpstreamConstants& c,
                                                     PhasePoint at, double step) {
    if (!(step > 0)) throw SolverFailure("step must be positive");
    auto S = [&](PhasePoint pt) {
        const FluidState s = reconstruct_state(c, pt);
        return entropy_per_baryon(c.eos, s.eps, s.n);
    };
    const double dS_dy = (S({at.y + step, at.v}) - S({at.y - step, at.v})) / (2 * step);
    const double dS_dv = (S({at.y, at.v + step}) - S({at.y, at.v - step})) / (2 * step);
    return {dS_dy, dS_dv};
}

} // namespace rmhd
