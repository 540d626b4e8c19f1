#include "rmhd/admissibility.hpp"

#include <algorithm>
#include <cmath>

namespace rmhd {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::AdmissibleUniqueProfile: return "AdmissibleUniqueProfile";
        case Verdict::NotAdmissible: return "NotAdmissible";
        default: return "Degenerate";
    }
}

ConditionB check_condition_b(const UpstreamConstants& c, const Locus& v2,
                             double y0, double y1, int samples_n) {
    if (samples_n < 256) throw SolverFailure("condition B needs samples_n >= 256");
    if (static_cast<int>(v2.samples.size()) < samples_n)
        throw SolverFailure("V2 locus under-sampled for condition B");
    ConditionB b;
    b.worst = -INFINITY;
    b.scale = 0;
    // Interior samples only: the quantity vanishes at both rest points by
    // construction, which says nothing about condition B.
    for (size_t i = 1; i + 1 < v2.samples.size(); ++i) {
        const PhasePoint pt = v2.samples[i];
        const double q = (y0 - y1) * f1(c, pt);
        b.scale = std::max(b.scale, std::abs(q));
        if (q > b.worst) {
            b.worst = q;
            b.arg_worst = pt;
        }
    }
    if (b.worst > 1e-8 * b.scale)
        b.state = ConditionB::State::Fail;
    else if (b.worst > -1e-8 * b.scale)
        // Touches zero without a sign change: the deferred Chapman-Jouguet
        // contact, reported as such rather than pass/fail.
        b.state = ConditionB::State::ChapmanJouguet;
    else
        b.state = ConditionB::State::Pass;
    return b;
}

AdmissibilityReport full_verdict(const FluidState& upstream, const EosSpec& eos,
                                 PhasePoint target, int grid_n) {
    AdmissibilityReport rep;
    const UpstreamConstants c = upstream_constants(upstream, eos);
    const double y0 = upstream.u[1];
    rep.point0 = {y0, 0};

    // Condition C: h1 h2 != 0 at "0" (else the parallel/perpendicular case,
    // out of scope).
    rep.condition_c = std::abs(upstream.h[1] * upstream.h[2]) > 1e-12;
    if (!rep.condition_c) {
        rep.failed.push_back('C');
        rep.verdict = Verdict::Degenerate;
        return rep;
    }

    // Condition D: evolutionarity.
    rep.condition_d = classify_regime(upstream, eos);
    if (rep.condition_d == ShockRegime::NotEvolutionary) {
        rep.failed.push_back('D');
        rep.verdict = Verdict::NotAdmissible;
        return rep;
    }

    rep.point1 = polish_rest_point(c, target);
    const double y1 = rep.point1.y, v1 = rep.point1.v;
    if (std::hypot(y1 - y0, v1) < 1e-8)
        throw SolverFailure("target polished into the trivial rest point");

    const int n = std::max(grid_n, 256) + 2;
    const double v_lo = std::min(0.0, v1), v_hi = std::max(0.0, v1);
    const double y_min = std::min(y0, y1), y_max = std::max(y0, y1);

    TraceOptions o2;
    o2.grid_n = n;
    o2.other_lo = 0.2 * y_min;
    o2.other_hi = 2.0 * y_max + 1.0;
    rep.v2_locus = trace_locus(c, Locus::Which::V2, v_lo, v_hi, rep.point0, o2);

    // Condition A: V1 single-valued on (y1, y0).
    TraceOptions o1;
    o1.grid_n = n;
    // Small absolute margin: the detector is about folds of the branch
    // through the corridor, not about separate V1 branches far outside it.
    const double v_margin = 0.05;
    o1.other_lo = v_lo - v_margin;
    o1.other_hi = v_hi + v_margin;
    o1.detect_multivalued = true;
    try {
        rep.v1_locus = trace_locus(c, Locus::Which::V1, y_min, y_max,
                                   rep.point0, o1);
        rep.condition_a = true;
        rep.condition_a_evidence = "V1 single-valued on (y1, y0)";
    } catch (const MultiValued& e) {
        rep.condition_a = false;
        rep.condition_a_evidence = e.what();
        rep.failed.push_back('A');
    }

    rep.condition_b = check_condition_b(c, rep.v2_locus, y0, y1, n - 2);
    if (rep.condition_b.state == ConditionB::State::Fail)
        rep.failed.push_back('B');
    if (rep.condition_b.state == ConditionB::State::ChapmanJouguet) {
        rep.cj_contact = true;
        rep.cj_location = rep.condition_b.arg_worst;
    }

    if (rep.cj_contact)
        rep.verdict = Verdict::Degenerate;
    else if (rep.failed.empty())
        rep.verdict = Verdict::AdmissibleUniqueProfile;
    else
        rep.verdict = Verdict::NotAdmissible;
    return rep;
}

} // namespace rmhd
