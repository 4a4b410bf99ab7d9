#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meplsim/distributions.hpp"
#include "meplsim/dynamics.hpp"
#include "meplsim/oracle.hpp"
#include "meplsim/placement.hpp"
#include "meplsim/topology.hpp"

namespace meplsim {

// Worker cap for independent trials; MEPLSIM_THREADS overrides the hardware
// default. A single dynamics run is always sequential.
int worker_count();

/// Run fn(0..count-1) on up to worker_count() threads. Each index must be
/// independent; exceptions are rethrown on the caller thread.
void parallel_for(int count, const std::function<void(int)>& fn);

struct InitialPlacementSpec {
    enum class Kind { random, explicit_forward, construction } kind = Kind::random;
    std::vector<HostId> forward;  // explicit_forward
};

// Fully describes one experiment: everything needed to reproduce its outputs
// byte for byte from the embedded seeds.
struct Scenario {
    Topology topology;
    RequestDistribution distribution;
    std::optional<ClusterSpec> clusters;  // set for clustered distributions
    InitialPlacementSpec initial;
    DynamicsConfig dynamics;
    int repetitions = 1;
    std::uint64_t seed = 0;
    std::string out_dir;
    OracleLimits oracle_limits;
    std::string config_echo;  // normalized config for the summary
};

/// Parse {"topology":…, "distribution":…|"construction":…, "initial_placement":…,
/// "dynamics":…, "repetitions":…, "seed":…, "output":{"dir":…}}.
Scenario load_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    double initial_epl = 0.0;
    double final_epl = 0.0;
    int sweeps = 0;
    int accepted_switches = 0;
    Termination terminated = Termination::local_min;
    Placement initial_placement;
    Placement final_placement;
    DynamicsTrace trace;
};

struct ScenarioArtifacts {
    std::vector<TrialResult> trials;
    std::string summary_json;
};

/// Run all repetitions (concurrently, deterministic per-trial seeds) and
/// build the aggregate summary.
ScenarioArtifacts run_scenario(const Scenario& s);

/// Write per-trial traces, snapshots (clustered scenarios only) and the
/// summary under s.out_dir. Returns the list of files written.
std::vector<std::string> write_artifacts(const Scenario& s, const ScenarioArtifacts& artifacts);

/// Snapshot of who sits where: one row per host with its coordinates, the
/// cluster id of the process placed there (0 = inactive) and a per-cluster
/// center flag. Plain CSV so any plotting tool can render it.
std::string placement_snapshot_csv(const Topology& t, const ClusterSpec& clusters,
                                   const Placement& pl);

/// Mean intra-cluster host distance under a placement, averaged over
/// clusters; the compactness measure used to judge grouping.
double mean_intra_cluster_distance(const Topology& t, const ClusterSpec& clusters,
                                   const Placement& pl);

struct RatioCurvePoint {
    int cluster_count = 0;
    double mean_initial_epl = 0.0;
    double mean_final_epl = 0.0;
    double mean_ratio = 0.0;  // initial/final, >= 1 under the M-rule
    double std_ratio = 0.0;
    int repetitions = 0;
};

enum class SweepTopology { ring, torus };

/// Improvement-ratio curve: for each cluster count, seeded random clustered
/// instances with random starts are driven to a local minimum by the
/// adjacent M-rule. For the torus, n must be a square (side = sqrt(n)).
std::vector<RatioCurvePoint> cluster_ratio_sweep(SweepTopology kind, int n,
                                                 const std::vector<int>& cluster_counts, int reps,
                                                 std::uint64_t seed,
                                                 double inactive_fraction = 0.0);

std::string ratio_curve_csv(const std::vector<RatioCurvePoint>& points);

}  // namespace meplsim
