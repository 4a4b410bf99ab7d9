#pragma once

#include <string>

#include "meplsim/distributions.hpp"
#include "meplsim/placement.hpp"
#include "meplsim/topology.hpp"

namespace meplsim {

// Comparison tolerance for inequality checks on probability-weighted sums.
// Normalization uses the tighter 1e-12 (see distributions.cpp).
constexpr double kMetricTolerance = 1e-9;

/// Expected path length sum p(u,v) * d(host(u), host(v)). Product mode only
/// iterates nodes with positive activity.
double epl(const Topology& t, const ActivityDistribution& dist, const Placement& pl);
double epl(const Topology& t, const PairDistribution& dist, const Placement& pl);
double epl(const Topology& t, const RequestDistribution& dist, const Placement& pl);

struct CenterResult {
    HostId center = 0;
    double c_value = 0.0;
};

/// Host minimizing the activity-weighted expected distance to all placed
/// processes; ties broken by lowest host index.
CenterResult expected_center(const Topology& t, const ActivityDistribution& dist,
                             const Placement& pl);

/// Rank per process: 0 for the highest activity, ties broken by ascending id.
std::vector<int> ranks(const ActivityDistribution& dist);

double expected_rank(const ActivityDistribution& dist);
double expected_sqrt_rank(const ActivityDistribution& dist);

enum class BoundContext { line, grid2d, none };

std::string to_string(BoundContext ctx);

// Snapshot of every bound quantity for one (topology, distribution,
// placement) triple. Which inequalities are claims rather than just numbers
// depends on the context and on whether the caller certified the placement
// as a local minimum of the C-rule.
struct BoundReport {
    double epl = 0.0;
    double c_value = 0.0;
    HostId center = 0;
    double expected_rank = 0.0;
    double expected_sqrt_rank = 0.0;
    bool sandwich_ok = false;   // c_value <= epl <= 2*c_value
    double upper_2ER = 0.0;     // 2*E[R]: EPL cap for line C-rule local minima
    double upper_4div_sqrt6 = 0.0;  // (4/sqrt 6)*E[sqrt R]: C cap on the 2-D grid
    double lower_half_ER = 0.0;     // E[R]/2: MEPL floor on the line
    double lower_inv_sqrt2 = 0.0;   // E[sqrt R]/sqrt 2: MEPL floor on the 2-D grid
    BoundContext context = BoundContext::none;
    bool local_minimum_certified = false;
    bool upper_2ER_applies = false;
    bool upper_4div_sqrt6_applies = false;
    bool lower_half_ER_applies = false;
    bool lower_inv_sqrt2_applies = false;

    std::string to_json() const;
};

/// Product distributions only; throws std::invalid_argument for pair
/// distributions (the center bounds are undefined there).
BoundReport bound_report(const Topology& t, const RequestDistribution& dist, const Placement& pl,
                         BoundContext context, bool local_minimum_certified = false);

}  // namespace meplsim
