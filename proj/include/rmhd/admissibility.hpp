#pragma once

#include <string>
#include <vector>

#include "rmhd/phaseplane.hpp"

namespace rmhd {

struct ConditionB {
    enum class State { Pass, Fail, ChapmanJouguet };
    State state = State::Fail;
    // Extremum of the Eq. 18 quantity (y0-y1) F1(Y2(v), v) over the interior
    // of (v1, v0); it must stay strictly negative for a pass.  The location
    // of the extremum is the diagnostic the paper points at (a crossing of
    // V1 and V2 when B fails).
    double worst = 0;
    PhasePoint arg_worst;
    double scale = 0; // max |quantity| over interior samples
};

ConditionB check_condition_b(const UpstreamConstants& c, const Locus& v2,
                             double y0, double y1, int samples_n);

enum class Verdict { AdmissibleUniqueProfile, NotAdmissible, Degenerate };
const char* to_string(Verdict v);

struct AdmissibilityReport {
    bool condition_a = false;
    std::string condition_a_evidence;
    ConditionB condition_b;
    bool condition_c = false;
    ShockRegime condition_d = ShockRegime::NotEvolutionary;
    bool cj_contact = false;
    PhasePoint cj_location;
    Verdict verdict = Verdict::NotAdmissible;
    std::vector<char> failed; // subset of {'A','B','C','D'}

    PhasePoint point0, point1;
    Locus v1_locus, v2_locus;
};

// Runs condition C first (h1 h2 != 0 at "0"; else Degenerate), then D
// (evolutionarity), then traces the loci and evaluates A and B.
// `target` must be a rest point distinct from (y0, 0); it is re-polished.
AdmissibilityReport full_verdict(const FluidState& upstream, const EosSpec& eos,
                                 PhasePoint target, int grid_n = 256);

} // namespace rmhd
