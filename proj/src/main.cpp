#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rmhd/scenario.hpp"

#ifndef RMHD_SCENARIO_DIR
#define RMHD_SCENARIO_DIR "scenarios"
#endif

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rmhd::Error("cannot read scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"viscous-profile admissibility for relativistic MHD shocks"};
    std::string command, scenario_path;
    rmhd::CliOptions opt;
    int grid_n = -1;
    double ode_tol = -1;

    app.add_option("command", command,
                   "speeds|jump|admissible|profile|sweep|figure1|figure2|figure3")
        ->required();
    app.add_option("--scenario", scenario_path, "scenario config file");
    app.add_option("--out-dir", opt.out_dir, "artifact output directory");
    app.add_option("--ratio", opt.ratios, "eta/xi ratio (repeatable, sweep)");
    app.add_option("--grid-n", grid_n, "grid override");
    app.add_option("--ode-tol", ode_tol, "ODE tolerance override");
    app.add_flag("--quiet", opt.quiet, "suppress stdout");
    CLI11_PARSE(app, argc, argv);

    if (grid_n > 0) opt.grid_n = grid_n;
    if (ode_tol > 0) opt.ode_tol = ode_tol;

    std::string cmd = command;
    if (command == "figure1" || command == "figure2" || command == "figure3") {
        if (scenario_path.empty())
            scenario_path = std::string(RMHD_SCENARIO_DIR) + "/fig" +
                            command.back() + ".cfg";
        cmd = command == "figure3" ? "sweep" : "profile";
    } else if (scenario_path.empty()) {
        std::cerr << "--scenario is required for `" << command << "`\n";
        return 4;
    }

    try {
        const rmhd::Scenario sc = rmhd::parse_scenario(slurp(scenario_path));
        return rmhd::run_command(cmd, sc, opt);
    } catch (const rmhd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
