#pragma once

// Frozen test scenarios shared across the suite.

#include "rmhd/admissibility.hpp"
#include "rmhd/profile.hpp"

namespace testbed {

using namespace rmhd;

inline EosSpec eos_third() { return EosSpec::linear(1.0 / 3.0); }

// Fast shock (DF): downstream near (0.670047, 0.028725).
inline FluidState fig1_upstream() {
    return make_fluid_state_p(0.97, 0, 1.0, 0.5, 1.0, 1.0, eos_third(), 1.0);
}

// Slow shock (DS): downstream near (0.287638, -0.222931).
inline FluidState fig2_upstream() {
    return make_fluid_state_p(0.38, 0, 1.0, 1.0, 1.0, 1.0, eos_third(), 1.0);
}

// Fast shock with u_A < u1 < u_A* at "1" (non-monotone Y2):
// downstream near (0.826278, 0.323326).
inline FluidState fig3_upstream() {
    return make_fluid_state_p(1.55, 0, 2.0, 0.1, 1.0, 0.2, eos_third(), 1.0);
}

// Anomalous window beyond the fig1 downstream energy density; three
// F1-crossings on V2 at (0.670047, 0.028725), (0.644819, 0.032934),
// (0.601611, 0.041338).
inline EosSpec condb_eos() {
    return EosSpec::anomalous_window(1.0 / 3.0, 1.0 / 3.0 - 0.017, 5.0, 6.2, 0.5);
}

inline FluidState condb_upstream() {
    return make_fluid_state_p(0.97, 0, 1.0, 0.5, 1.0, 1.0, condb_eos(), 1.0);
}

constexpr PhasePoint kFig1Down{0.670046614207722, 0.028724971502427};
constexpr PhasePoint kFig2Down{0.287638414611099, -0.222931233416280};
constexpr PhasePoint kFig3Down{0.826277899736662, 0.323325562756742};
constexpr PhasePoint kCondBTarget{0.601611489860404, 0.041338398099326};

} // namespace testbed
