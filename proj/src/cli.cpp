#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rmhd/scenario.hpp"

namespace rmhd {

namespace {

namespace fs = std::filesystem;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << content;
}

std::string csv_of(const ProfileTrajectory& traj) {
    std::string s = "x,y,v,u2,p,eps,n,S\n";
    for (const auto& q : traj.points) {
        const double u2 = q.pt.v * std::sqrt(1 + q.pt.y * q.pt.y);
        s += fmt(q.x) + "," + fmt(q.pt.y) + "," + fmt(q.pt.v) + "," + fmt(u2) +
             "," + fmt(q.p) + "," + fmt(q.eps) + "," + fmt(q.n) + "," +
             fmt(q.S) + "\n";
    }
    return s;
}

// --- hand-emitted SVG phase portrait ---------------------------------------

struct Canvas {
    double x0, x1, y0, y1; // world bbox (y horizontal, v vertical)
    static constexpr double W = 800, H = 600;
    double px(double y) const { return (y - x0) / (x1 - x0) * W; }
    double py(double v) const { return H - (v - y0) / (y1 - y0) * H; }
};

std::string poly(const Canvas& cv, const std::vector<PhasePoint>& pts,
                 const std::string& style) {
    std::string s = "<polyline fill=\"none\" " + style + " points=\"";
    char buf[64];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", cv.px(p.y), cv.py(p.v));
        s += buf;
    }
    s += "\"/>\n";
    return s;
}

std::string arrows(const Canvas& cv, const UpstreamConstants& c,
                   const ViscosityPair& visc) {
    std::string s;
    char buf[256];
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            const double y = cv.x0 + (cv.x1 - cv.x0) * (i + 0.5) / 12;
            const double v = cv.y0 + (cv.y1 - cv.y0) * (j + 0.5) / 12;
            double gy, gv;
            try {
                std::tie(gy, gv) = rhs(c, visc, {y, v});
            } catch (const Error&) {
                continue;
            }
            // Direction in pixel space (v axis points up in world coords).
            const double ax = gy, ay = -gv;
            const double n = std::hypot(ax, ay);
            if (!(n > 0)) continue;
            const double ux = ax / n, uy = ay / n;
            const double X = cv.px(y), Y = cv.py(v), L = 7, Wd = 2.5;
            std::snprintf(buf, sizeof buf,
                          "<polygon fill=\"#999\" points=\"%.2f,%.2f %.2f,%.2f "
                          "%.2f,%.2f\"/>\n",
                          X + L * ux, Y + L * uy, X - Wd * uy, Y + Wd * ux,
                          X + Wd * uy, Y - Wd * ux);
            s += buf;
        }
    return s;
}

std::string svg_portrait(const UpstreamConstants& c, const ViscosityPair& visc,
                         const Locus& v1, const Locus& v2,
                         const std::vector<const ProfileTrajectory*>& trajs,
                         PhasePoint p0, PhasePoint p1) {
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    auto grow = [&](PhasePoint p) {
        x0 = std::min(x0, p.y); x1 = std::max(x1, p.y);
        y0 = std::min(y0, p.v); y1 = std::max(y1, p.v);
    };
    for (const auto& p : v1.samples) grow(p);
    for (const auto& p : v2.samples) grow(p);
    for (const auto* t : trajs)
        for (const auto& q : t->points) grow(q.pt);
    const double mx = 0.1 * (x1 - x0 + 1e-12), my = 0.1 * (y1 - y0 + 1e-12);
    Canvas cv{x0 - mx, x1 + mx, y0 - my, y1 + my};

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n"
      << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << arrows(cv, c, visc)
      << poly(cv, v1.samples, "stroke=\"black\" stroke-width=\"2\"")
      << poly(cv, v2.samples,
              "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"8 5\"");
    static const char* colors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad"};
    for (size_t i = 0; i < trajs.size(); ++i) {
        std::vector<PhasePoint> pts;
        pts.reserve(trajs[i]->points.size());
        for (const auto& q : trajs[i]->points) pts.push_back(q.pt);
        s << poly(cv, pts, std::string("stroke=\"") + colors[i % 4] +
                               "\" stroke-width=\"1.5\"");
        if (!pts.empty()) {
            const PhasePoint mid = pts[pts.size() / 2];
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\" "
                          "fill=\"%s\">VP</text>\n",
                          cv.px(mid.y) + 5, cv.py(mid.v) - 5, colors[i % 4]);
            s << buf;
        }
    }
    char buf[256];
    for (const auto& [pt, name] : {std::pair{p0, "0"}, std::pair{p1, "1"}}) {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>"
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">\"%s\""
                      "</text>\n",
                      cv.px(pt.y), cv.py(pt.v), cv.px(pt.y) + 6,
                      cv.py(pt.v) + 14, name);
        s << buf;
    }
    s << "</svg>\n";
    return s.str();
}

// --- reports ----------------------------------------------------------------

std::string machine_block(const AdmissibilityReport& rep) {
    std::ostringstream s;
    s << "---\n";
    s << "verdict=" << to_string(rep.verdict) << "\n";
    s << "condition_a=" << (rep.condition_a ? "true" : "false") << "\n";
    const char* bstate =
        rep.condition_b.state == ConditionB::State::Pass    ? "pass"
        : rep.condition_b.state == ConditionB::State::Fail ? "fail"
                                                           : "chapman_jouguet";
    s << "condition_b=" << bstate << "\n";
    s << "condition_c=" << (rep.condition_c ? "true" : "false") << "\n";
    s << "condition_d=" << to_string(rep.condition_d) << "\n";
    s << "eq18_extremum=" << fmt(rep.condition_b.worst) << "\n";
    s << "eq18_arg_y=" << fmt(rep.condition_b.arg_worst.y) << "\n";
    s << "eq18_arg_v=" << fmt(rep.condition_b.arg_worst.v) << "\n";
    s << "cj_contact=" << (rep.cj_contact ? "true" : "false") << "\n";
    s << "y0=" << fmt(rep.point0.y) << "\n";
    s << "y1=" << fmt(rep.point1.y) << "\n";
    s << "v1=" << fmt(rep.point1.v) << "\n";
    return s.str();
}

int verdict_exit_code(const AdmissibilityReport& rep) {
    switch (rep.verdict) {
        case Verdict::AdmissibleUniqueProfile: return 0;
        case Verdict::NotAdmissible: return 2;
        default: return 3;
    }
}

struct Emitter {
    const Scenario& sc;
    const CliOptions& opt;
    std::ostringstream report;

    void say(const std::string& line) {
        report << line << "\n";
        if (!opt.quiet) std::cout << line << "\n";
    }
    void finish(const std::string& tail = "") {
        report << tail;
        if (!sc.report_path.empty())
            write_file(fs::path(opt.out_dir) / sc.report_path, report.str());
    }
};

PhasePoint pick_target(const Scenario& sc, const UpstreamConstants& c,
                       const std::vector<PhasePoint>& rest, double y0) {
    if (sc.target) return polish_rest_point(c, *sc.target);
    const PhasePoint* best = nullptr;
    double bestd = 0;
    for (const auto& p : rest) {
        const double d = std::hypot(p.y - y0, p.v);
        if (d > 1e-6 && d > bestd) {
            bestd = d;
            best = &p;
        }
    }
    if (!best)
        throw SolverFailure("no non-trivial rest point found in the search box");
    return *best;
}

int run_checked(const std::string& command, const Scenario& sc,
                const CliOptions& opt) {
    Scenario scn = sc;
    if (opt.grid_n) scn.grid_n = *opt.grid_n;
    if (opt.ode_tol) scn.ode_tol = *opt.ode_tol;

    const FluidState up = upstream_state(scn);
    const UpstreamConstants c = upstream_constants(up, scn.eos);
    const double y0 = up.u[1];
    Emitter em{scn, opt};

    if (command == "speeds") {
        const LocalParams lp = local_params(up, scn.eos);
        const CharacteristicSpeeds cs = characteristic_speeds(lp);
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "u_sl u_A u_A* u_f = %.6f %.6f %.6f %.6f", cs.u_sl,
                      cs.u_A, cs.u_A_star, cs.u_f);
        em.say(buf);
        em.say(std::string("regime = ") + to_string(classify_regime(up, scn.eos)));
        em.finish();
        return 0;
    }

    if (command == "jump") {
        const auto rest = find_rest_points(c, default_search_box(scn), scn.grid_n);
        em.say("rest points (y, v, p, eps, n, S):");
        for (const auto& pt : rest) {
            const FluidState s = reconstruct_state(c, pt);
            em.say("  " + fmt(pt.y) + " " + fmt(pt.v) + " " + fmt(s.p) + " " +
                   fmt(s.eps) + " " + fmt(s.n) + " " +
                   fmt(entropy_per_baryon(scn.eos, s.eps, s.n)));
        }
        em.finish();
        return 0;
    }

    // The remaining commands all need the admissibility analysis.  The
    // target rest point is only searched for when conditions C and D leave
    // something to analyze (full_verdict short-circuits before using it).
    PhasePoint target{0.5 * y0, 0};
    const bool need_target =
        std::abs(up.h[1] * up.h[2]) > 1e-12 &&
        classify_regime(up, scn.eos) != ShockRegime::NotEvolutionary;
    if (need_target) {
        const auto rest =
            find_rest_points(c, default_search_box(scn), scn.grid_n);
        target = pick_target(scn, c, rest, y0);
    }
    const AdmissibilityReport rep = full_verdict(up, scn.eos, target, scn.grid_n);

    em.say(std::string("verdict: ") + to_string(rep.verdict));
    em.say(std::string("condition A: ") + (rep.condition_a ? "pass" : "FAIL"));
    em.say(std::string("condition B: ") +
           (rep.condition_b.state == ConditionB::State::Pass ? "pass"
            : rep.condition_b.state == ConditionB::State::Fail
                ? "FAIL"
                : "Chapman-Jouguet contact") +
           " (extremum " + fmt(rep.condition_b.worst) + " at v=" +
           fmt(rep.condition_b.arg_worst.v) + ")");
    em.say(std::string("condition C: ") + (rep.condition_c ? "pass" : "FAIL"));
    em.say(std::string("condition D: ") + to_string(rep.condition_d));

    if (command == "admissible") {
        em.finish(machine_block(rep));
        return verdict_exit_code(rep);
    }

    if (rep.verdict != Verdict::AdmissibleUniqueProfile) {
        em.finish(machine_block(rep));
        return verdict_exit_code(rep);
    }

    if (command == "profile") {
        const ProfileTrajectory traj =
            shoot_profile(c, scn.viscosity, rep.point0, rep.point1,
                          rep.condition_d, scn.ode_tol, scn.shoot_delta);
        em.say("profile connected, endpoint distance " +
               fmt(traj.endpoint_distance) + ", " +
               std::to_string(traj.points.size()) + " samples");
        if (!scn.csv_path.empty())
            write_file(fs::path(opt.out_dir) / scn.csv_path, csv_of(traj));
        if (!scn.svg_path.empty())
            write_file(fs::path(opt.out_dir) / scn.svg_path,
                       svg_portrait(c, scn.viscosity, rep.v1_locus,
                                    rep.v2_locus, {&traj}, rep.point0,
                                    rep.point1));
        em.finish(machine_block(rep) + "connected=true\nendpoint_distance=" +
                  fmt(traj.endpoint_distance) + "\n");
        return 0;
    }

    if (command == "sweep") {
        std::vector<double> ratios = opt.ratios;
        if (ratios.empty()) ratios = {1.0, 0.1, 0.01};
        const auto entries = viscosity_ratio_sweep(
            c, ratios, scn.viscosity.xi, scn.ode_tol, rep.point0, rep.point1,
            rep.condition_d, rep.v2_locus, scn.shoot_delta);
        std::vector<const ProfileTrajectory*> trajs;
        std::string tail = machine_block(rep);
        for (size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            trajs.push_back(&e.traj);
            em.say("ratio " + fmt(e.ratio) + ": max distance to V2 " +
                   fmt(e.max_distance_to_v2) + ", max |dv/dy| " +
                   fmt(e.max_slope) +
                   (e.jump_detected ? ", jump detected" : ""));
            tail += "ratio_" + std::to_string(i) + "=" + fmt(e.ratio) +
                    "\nmax_dist_v2_" + std::to_string(i) + "=" +
                    fmt(e.max_distance_to_v2) + "\nmax_slope_" +
                    std::to_string(i) + "=" + fmt(e.max_slope) +
                    "\njump_" + std::to_string(i) + "=" +
                    (e.jump_detected ? "true" : "false") + "\n";
            if (!scn.csv_path.empty()) {
                fs::path p = fs::path(opt.out_dir) / scn.csv_path;
                p.replace_extension(".r" + std::to_string(i) +
                                    p.extension().string());
                write_file(p, csv_of(e.traj));
            }
        }
        if (!scn.svg_path.empty())
            write_file(fs::path(opt.out_dir) / scn.svg_path,
                       svg_portrait(c, scn.viscosity, rep.v1_locus,
                                    rep.v2_locus, trajs, rep.point0,
                                    rep.point1));
        em.finish(tail);
        return 0;
    }

    throw Error("unknown command `" + command + "`");
}

} // namespace

int run_command(const std::string& command, const Scenario& scenario,
                const CliOptions& opt) {
    try {
        return run_checked(command, scenario, opt);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace rmhd
