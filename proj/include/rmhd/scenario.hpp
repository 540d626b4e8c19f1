#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmhd/profile.hpp"

namespace rmhd {

// A complete problem setup as read from a config file:
// line-oriented `key = value` under `[section]` headers, `#` comments.
struct Scenario {
    EosSpec eos;

    // [upstream]; exactly one of p or eps given.
    double u1 = 0, h1 = 0, h2 = 0, n = 0;
    std::optional<double> p, eps;
    double mu_over_4pi = 1;

    ViscosityPair viscosity{1, 1};

    // [numerics]
    int grid_n = 256;
    double ode_tol = 1e-9;
    double shoot_delta = 1e-6;
    std::optional<SearchBox> locus_range; // override for the rest-point search

    // [target] (optional): which downstream rest point to certify; when
    // absent the rest point farthest from "0" in the box is used.
    std::optional<PhasePoint> target;

    // [outputs]
    std::string csv_path, svg_path, report_path;
};

Scenario parse_scenario(const std::string& text);

FluidState upstream_state(const Scenario& sc);

// Default rest-point search box when [numerics] gives no override.
SearchBox default_search_box(const Scenario& sc);

struct CliOptions {
    std::string out_dir = ".";
    std::vector<double> ratios; // sweep only
    std::optional<int> grid_n;
    std::optional<double> ode_tol;
    bool quiet = false;
};

// Commands: speeds, jump, admissible, profile, sweep, figure1/2/3 (the
// figure commands load the bundled scenarios).  Returns the process exit
// code: 0 success/admissible, 2 not admissible, 3 degenerate (condition C),
// 4 numerical failure.
int run_command(const std::string& command, const Scenario& scenario,
                const CliOptions& opt);

} // namespace rmhd
