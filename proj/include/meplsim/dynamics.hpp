#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meplsim/distributions.hpp"
#include "meplsim/metrics.hpp"
#include "meplsim/placement.hpp"
#include "meplsim/topology.hpp"

namespace meplsim {

enum class Rule { M, C };
enum class MoveSet { adjacent, adjacent_knight };
enum class Schedule { round_robin, random_pair };
enum class DynamicsMode { exact, online };

std::string to_string(Rule rule);
std::string to_string(MoveSet move_set);

struct DynamicsConfig {
    Rule rule = Rule::M;
    MoveSet move_set = MoveSet::adjacent;
    Schedule schedule = Schedule::round_robin;
    // Switches are accepted only when delta < -epsilon, so floating-point
    // noise and the "all switches non-improving" tie cases never cycle.
    double epsilon = 1e-12;
    int max_sweeps = 10000;
    DynamicsMode mode = DynamicsMode::exact;
    std::uint64_t seed = 0;
    std::int64_t window_samples = 0;  // online mode: requests drawn per sweep
};

struct TraceStep {
    int sweep = 0;
    int step = 0;
    ProcessId u = 0;
    ProcessId v = 0;
    HostId host_u = 0;  // hosts occupied before the switch
    HostId host_v = 0;
    double delta = 0.0;
    double epl_after = 0.0;
    double c_after = 0.0;  // NaN for M-rule runs (center not tracked)
};

enum class Termination { local_min, max_sweeps };

struct DynamicsTrace {
    Rule rule = Rule::M;
    std::vector<TraceStep> steps;
    Termination terminated = Termination::local_min;
    int sweeps = 0;

    /// Header plus one row per accepted switch; deterministic formatting.
    std::string to_csv() const;
};

struct DynamicsResult {
    Placement placement;
    DynamicsTrace trace;
};

/// Objective change if u and v switch hosts; negative means improving.
/// M-rule: exact EPL delta. C-rule: delta of the expected distance to the
/// current center, with the center held fixed during evaluation.
double switch_delta(const Topology& t, const RequestDistribution& dist, const Placement& pl,
                    ProcessId u, ProcessId v, Rule rule);

/// Greedy switching until a sweep accepts nothing (certified local minimum)
/// or max_sweeps is reached. Deterministic given the config seed.
DynamicsResult run_dynamics(const Topology& t, const RequestDistribution& dist,
                            const Placement& initial, const DynamicsConfig& cfg);

/// True iff every candidate pair in the move set has delta >= -epsilon.
bool is_local_minimum(const Topology& t, const RequestDistribution& dist, const Placement& pl,
                      Rule rule, MoveSet move_set, double epsilon = 1e-12);

struct MonotoneViolation {
    ProcessId far_process = 0;   // strictly farther from the center
    ProcessId near_process = 0;  // reachable via distance-decreasing switches
    double far_activity = 0.0;
    double near_activity = 0.0;
};

/// Checks the center-monotone property: along every chain of switch moves
/// that goes strictly closer to the center, activities must not decrease.
/// Empty result means the property holds. Product distributions only.
std::vector<MonotoneViolation> verify_center_monotone(const Topology& t,
                                                      const RequestDistribution& dist,
                                                      const Placement& pl, MoveSet move_set,
                                                      double tolerance = kMetricTolerance);

/// Online variant: per sweep the engine draws cfg.window_samples requests and
/// decides switches from the empirical activity estimates accumulated so far.
/// Product distributions only.
DynamicsResult run_online_dynamics(const Topology& t, const RequestDistribution& dist,
                                   const Placement& initial, const DynamicsConfig& cfg);

}  // namespace meplsim
