#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "meplsim/experiments.hpp"
#include "meplsim/metrics.hpp"
#include "meplsim/oracle.hpp"
#include "meplsim/verify.hpp"

namespace {

int cmd_run(const std::string& scenario_path, const std::string& out_override) {
    meplsim::Scenario scenario = meplsim::load_scenario_file(scenario_path);
    if (!out_override.empty()) scenario.out_dir = out_override;
    if (scenario.out_dir.empty())
        throw std::runtime_error("no output directory: set output.dir or pass --out");
    auto artifacts = meplsim::run_scenario(scenario);
    auto written = meplsim::write_artifacts(scenario, artifacts);
    for (const auto& path : written) std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_sweep(const std::string& topology, int n, const std::vector<int>& clusters, int reps,
              std::uint64_t seed, double inactive_frac, const std::string& out_dir) {
    meplsim::SweepTopology kind;
    if (topology == "ring") {
        kind = meplsim::SweepTopology::ring;
    } else if (topology == "torus") {
        kind = meplsim::SweepTopology::torus;
    } else {
        throw std::runtime_error("--topology must be ring or torus");
    }
    auto points = meplsim::cluster_ratio_sweep(kind, n, clusters, reps, seed, inactive_frac);
    const std::string csv = meplsim::ratio_curve_csv(points);
    if (out_dir.empty()) {
        std::cout << csv;
    } else {
        std::filesystem::create_directories(out_dir);
        const std::string path = out_dir + "/ratio_curve.csv";
        std::ofstream out(path, std::ios::binary);
        out << csv;
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& out_file) {
    meplsim::SuiteReport report = meplsim::run_suite(suite);
    const std::string json = report.to_json() + "\n";
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        out << json;
    }
    std::cout << json;
    return report.passed() ? 0 : 1;
}

int cmd_oracle(const std::string& scenario_path) {
    meplsim::Scenario scenario = meplsim::load_scenario_file(scenario_path);
    auto result =
        meplsim::brute_force_mepl(scenario.topology, scenario.distribution, scenario.oracle_limits);
    auto minima =
        meplsim::enumerate_local_minima(scenario.topology, scenario.distribution,
                                        scenario.dynamics.rule, scenario.dynamics.move_set,
                                        scenario.dynamics.epsilon, scenario.oracle_limits);
    nlohmann::json j;
    j["mepl"] = result.mepl_value;
    j["argmin"] = result.optimal_placement.forward();
    j["explored_placements"] = result.explored_count;
    j["local_minima_count"] = minima.size();
    if (!minima.empty()) {
        j["worst_local_epl"] = minima.front().epl;
        j["ratio"] = result.mepl_value > 0.0 ? minima.front().epl / result.mepl_value : 1.0;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meplsim: self-adjusting process placement simulator and verifier"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir;
    auto* run = app.add_subcommand("run", "run a scenario and write traces/snapshots/summary");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--out", out_dir, "output directory (overrides output.dir)");

    std::string sweep_topology = "torus";
    int sweep_n = 900;
    std::vector<int> sweep_clusters;
    int sweep_reps = 10;
    std::uint64_t sweep_seed = 1;
    double inactive_frac = 0.0;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "improvement-ratio curve over cluster counts");
    sweep->add_option("--topology", sweep_topology, "ring or torus")->required();
    sweep->add_option("--n", sweep_n, "node count (square for torus)")->required();
    sweep->add_option("--clusters", sweep_clusters, "cluster counts")->required()->delimiter(',');
    sweep->add_option("--reps", sweep_reps, "repetitions per point");
    sweep->add_option("--seed", sweep_seed, "base seed");
    sweep->add_option("--inactive-frac", inactive_frac, "fraction of inactive nodes");
    sweep->add_option("--out", sweep_out, "output directory for ratio_curve.csv");

    std::string suite;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--out", verify_out, "write the JSON report to a file");

    std::string oracle_scenario;
    auto* oracle = app.add_subcommand("oracle", "brute-force optimum and local minima census");
    oracle->add_option("scenario", oracle_scenario, "scenario JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(scenario_path, out_dir);
        if (sweep->parsed())
            return cmd_sweep(sweep_topology, sweep_n, sweep_clusters, sweep_reps, sweep_seed,
                             inactive_frac, sweep_out);
        if (verify->parsed()) return cmd_verify(suite, verify_out);
        if (oracle->parsed()) return cmd_oracle(oracle_scenario);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
