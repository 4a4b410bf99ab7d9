#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "meplsim/distributions.hpp"
#include "meplsim/dynamics.hpp"
#include "meplsim/placement.hpp"
#include "meplsim/topology.hpp"

namespace meplsim {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct OracleResult {
    double mepl_value = 0.0;
    Placement optimal_placement;
    long long explored_count = 0;  // complete placements evaluated
    double c_min = 0.0;            // only meaningful when c_min_computed
    bool c_min_computed = false;
};

// Exhaustive enumeration limits. Only placements of processes with nonzero
// marginal activity are enumerated (inactive processes are interchangeable),
// and for product distributions equal-activity processes are canonicalized
// to host-ascending order, which collapses their permutations.
struct OracleLimits {
    int max_active = 9;
    long long max_placements = 200'000'000;
};

/// Exact minimum EPL over all placements, with the lexicographically first
/// optimal placement. Set compute_c_min to also minimize the expected
/// distance to the center over the same space (product only; disables the
/// branch-and-bound pruning).
OracleResult brute_force_mepl(const Topology& t, const RequestDistribution& dist,
                              const OracleLimits& limits = {}, bool compute_c_min = false);

struct LocalMinimumRecord {
    Placement placement;
    double epl = 0.0;
};

/// Every placement (one canonical representative per equal-activity /
/// inactive-process orbit) that is a local minimum of the rule over the move
/// set, sorted by descending EPL so the worst local minimum comes first.
std::vector<LocalMinimumRecord> enumerate_local_minima(const Topology& t,
                                                       const RequestDistribution& dist, Rule rule,
                                                       MoveSet move_set, double epsilon = 1e-12,
                                                       const OracleLimits& limits = {});

/// Lattice point count of the right-triangle region with legs x and x/2:
/// A(x) = sum_{i=0}^{floor(x/2)} (floor(x) + 1 - 2i). Defined for x >= 0.
long long triangle_count(double x);

/// Node count of the distance-decreasing polygon for a node offset (a,b)
/// from the center: S1 + S2 + S3 + S4 + S5 - 3 with S1 = (a-1)(b-1),
/// S2 = A(a-1), S3 = A(b+a/2), S4 = A(a+b/2), S5 = A(b-1).
long long polygon_rank_bound(long long a, long long b);

// Closed forms for the ring with c uniform clusters of 2k+1 nodes, kept as
// exact rationals: the interleaved placement's EPL, the contiguous
// per-cluster bound, and their quotient 3c/2. The interleaved value matches
// the measured epl() of the generated instance exactly; the contiguous value
// is a per-cluster path-count bound whose measured counterpart is twice as
// large (see tests).
struct RingClusterAnalytics {
    Rational interleaved_epl;
    Rational contiguous_epl;
    Rational ratio;
};

RingClusterAnalytics ring_cluster_analytics(int cluster_count, int k);

struct RatioStudy {
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    int trials = 0;
    std::vector<double> ratios;            // per trial, EPL(local min)/MEPL
    std::vector<long long> histogram;      // bins of width 0.25 from ratio 1.0
};

/// Seeded empirical companion to the approximation theorems: random
/// activities and random starts, greedy dynamics to a local minimum, ratio
/// against the brute-force optimum.
RatioStudy approximation_ratio_study(const Topology& t, ActivityFamily family, double zipf_s,
                                     Rule rule, MoveSet move_set, int trials, std::uint64_t seed,
                                     const OracleLimits& limits = {});

}  // namespace meplsim
