#pragma once

#include <utility>
#include <vector>

#include "rmhd/admissibility.hpp"

namespace rmhd {

struct ViscosityPair {
    double xi = 1, eta = 1; // bulk and shear, both strictly positive
};

struct ProfileSample {
    double x;
    PhasePoint pt;
    double p, eps, n, S;
};

enum class ProfileDirection { ForwardFrom0, BackwardFrom1 };

struct ProfileTrajectory {
    std::vector<ProfileSample> points; // x strictly increasing
    bool connected = false;
    double endpoint_distance = 0;
    ProfileDirection direction = ProfileDirection::ForwardFrom0;
};

// (du1/dx, dv/dx) = (F1/(xi+4eta/3), F2/eta)  (Eq. 15).
std::pair<double, double> rhs(const UpstreamConstants& c,
                              const ViscosityPair& visc, PhasePoint pt);

// Saddle-manifold shooting.  DS: forward from "0" along the unstable
// eigenvector; DF: backward from the saddle "1" along its stable
// eigenvector, then reversed.  Adaptive embedded RK (Cash-Karp 4/5),
// relative tolerance tol, absolute 1e-3*tol; success when within 10*tol of
// the target in phase-plane distance.
ProfileTrajectory shoot_profile(const UpstreamConstants& c,
                                const ViscosityPair& visc, PhasePoint from,
                                PhasePoint to, ShockRegime regime,
                                double tol = 1e-9, double delta = 1e-6);

struct CrossingReport {
    int crossings = 0;  // transversal locus crossings along the trajectory
    int violations = 0; // crossings whose direction contradicts the paper
};

// Checks the stated flow directions: trajectories cross V2 right-to-left
// and V1 bottom-up (signs flip with sgn(h1 h2) and sgn(y0-y1)).
CrossingReport crossing_direction_checks(const UpstreamConstants& c,
                                         const ProfileTrajectory& traj,
                                         const Locus& v1, const Locus& v2);

struct SweepEntry {
    double ratio; // eta/xi
    ProfileTrajectory traj;
    double max_distance_to_v2; // over the V2-tracking segment
    double max_slope;          // max |dv/dy| along the trajectory
    bool jump_detected;
};

// The eta -> 0 experiment of Fig. 3: for each ratio integrate the profile
// and measure how closely it tracks V2 and how steep it gets (the jump
// diagnostic for the limiting discontinuity).
std::vector<SweepEntry> viscosity_ratio_sweep(const UpstreamConstants& c,
                                              const std::vector<double>& ratios,
                                              double base_xi, double tol,
                                              PhasePoint from, PhasePoint to,
                                              ShockRegime regime,
                                              const Locus& v2,
                                              double delta = 1e-6);

} // namespace rmhd
