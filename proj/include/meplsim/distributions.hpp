#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "meplsim/placement.hpp"
#include "meplsim/topology.hpp"

namespace meplsim {

// Per-node activity levels inducing the symmetric product request
// distribution p(u,v) = p(u)*p(v). Never expanded to an n^2 table.
class ActivityDistribution {
public:
    explicit ActivityDistribution(std::vector<double> activities);

    int size() const { return static_cast<int>(activities_.size()); }
    double activity(ProcessId u) const { return activities_[u]; }
    const std::vector<double>& activities() const { return activities_; }

    /// Process ids with activity > 0.
    const std::vector<ProcessId>& active() const { return active_; }

private:
    std::vector<double> activities_;
    std::vector<ProcessId> active_;
};

// General request distribution as a sparse map over ordered pairs.
class PairDistribution {
public:
    PairDistribution(int n, std::map<std::pair<ProcessId, ProcessId>, double> entries,
                     bool symmetric);

    int size() const { return n_; }
    bool symmetric() const { return symmetric_; }
    const std::map<std::pair<ProcessId, ProcessId>, double>& entries() const { return entries_; }

    /// Total probability mass in which u participates as source or target.
    double marginal(ProcessId u) const { return marginals_[u]; }
    const std::vector<ProcessId>& active() const { return active_; }

    /// Partners of u with folded weight p(u,w)+p(w,u), self-pairs excluded
    /// (they contribute 0 to any path-length sum).
    const std::vector<std::pair<ProcessId, double>>& incident(ProcessId u) const {
        return incident_[u];
    }

private:
    int n_ = 0;
    bool symmetric_ = false;
    std::map<std::pair<ProcessId, ProcessId>, double> entries_;
    std::vector<double> marginals_;
    std::vector<ProcessId> active_;
    std::vector<std::vector<std::pair<ProcessId, double>>> incident_;
};

using RequestDistribution = std::variant<ActivityDistribution, PairDistribution>;

int distribution_size(const RequestDistribution& dist);
bool is_product(const RequestDistribution& dist);

// --- constructors -----------------------------------------------------------

/// Scale nonnegative activity levels into a distribution. Order preserved.
ActivityDistribution product_distribution(const std::vector<double>& raw_activities);

// Disjoint request groups V_1..V_c with weights p_1..p_c; V_0 is inactive.
struct ClusterSpec {
    std::vector<std::vector<ProcessId>> clusters;  // V_1..V_c
    std::vector<double> weights;                   // p_1..p_c, sums to 1
    int node_count = 0;                            // total n; V_0 is the rest
};

/// Even partition of [0,n): c clusters of (n-inactive)/c nodes (first
/// remainder clusters get one extra), uniform weights, trailing ids inactive.
ClusterSpec uniform_cluster_spec(int node_count, int cluster_count, int inactive_count);

/// p(u,v) = p_i/|V_i|^2 for u,v in the same cluster (self-pairs included),
/// 0 otherwise.
PairDistribution clustered_distribution(const ClusterSpec& spec);

/// Cluster id per process: 1..c for members of V_1..V_c, 0 for V_0.
std::vector<int> cluster_ids(const ClusterSpec& spec);

// --- special instances ------------------------------------------------------

struct CliqueInstance {
    Topology topology;
    ActivityDistribution distribution;
};

/// Host graph from an edge list plus uniform activity 1/k on processes
/// 0..k-1. MEPL is 1 - 1/k exactly when the host contains a k-clique.
CliqueInstance clique_instance(int node_count, const std::vector<std::pair<int, int>>& edges,
                               int k);

struct TreeInstance {
    Topology topology;  // 2-D grid [k]^2, k = tree node count
    PairDistribution distribution;
};

/// Tree-embedding instance: mass 1/(k-1) per tree edge, split across the two
/// ordered directions. MEPL is 1 exactly when the tree embeds in the grid.
TreeInstance tree_instance(const std::vector<std::pair<int, int>>& tree_edges);

struct LineArrangement {
    Topology topology;  // d-dim grid of side^d hosts
    ActivityDistribution distribution;
    Placement placement;
};

/// side active processes with uniform activity 1/side placed consecutively
/// along axis 0 of a d-dimensional grid; a bad but stable starting point.
LineArrangement worst_case_line_arrangement(int dims, int side);

struct RingClusterInstance {
    Topology topology;  // ring of c*(2k+1) hosts
    PairDistribution distribution;
    Placement placement;  // interleaved: one member of each cluster in turn
    ClusterSpec spec;
};

/// Ring with c uniform clusters of 2k+1 nodes each and the interleaved
/// placement that cycles through one member of every cluster in turn.
/// The contiguous (cluster-sorted) placement is the identity.
RingClusterInstance interleaved_ring_placement(int cluster_count, int k);

// --- random generation ------------------------------------------------------

enum class ActivityFamily { uniform, zipf, dirichlet_like };

/// Seeded, reproducible activity vector. `uniform` and `zipf` are
/// deterministic families; `dirichlet_like` draws Exp(1) levels.
ActivityDistribution random_activities(int n, ActivityFamily family, double zipf_s,
                                       std::uint64_t seed);

}  // namespace meplsim
