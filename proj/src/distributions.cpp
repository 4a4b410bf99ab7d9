#include "meplsim/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "meplsim/rng.hpp"

namespace meplsim {

namespace {
constexpr double kNormTolerance = 1e-12;
}

ActivityDistribution::ActivityDistribution(std::vector<double> activities)
    : activities_(std::move(activities)) {
    double sum = 0.0;
    for (std::size_t u = 0; u < activities_.size(); ++u) {
        double p = activities_[u];
        if (p < 0.0) throw std::invalid_argument("activity: negative entry");
        if (p > 0.0) active_.push_back(static_cast<ProcessId>(u));
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormTolerance)
        throw std::invalid_argument("activity: entries must sum to 1");
}

PairDistribution::PairDistribution(int n,
                                   std::map<std::pair<ProcessId, ProcessId>, double> entries,
                                   bool symmetric)
    : n_(n), symmetric_(symmetric), entries_(std::move(entries)) {
    marginals_.assign(n, 0.0);
    incident_.assign(n, {});
    double sum = 0.0;
    for (const auto& [pair, p] : entries_) {
        auto [u, v] = pair;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("pair distribution: process id out of range");
        if (p < 0.0) throw std::invalid_argument("pair distribution: negative entry");
        sum += p;
        marginals_[u] += p;
        marginals_[v] += p;
        if (symmetric_) {
            auto it = entries_.find({v, u});
            if (it == entries_.end() || std::abs(it->second - p) > kNormTolerance)
                throw std::invalid_argument("pair distribution: marked symmetric but is not");
        }
    }
    if (std::abs(sum - 1.0) > kNormTolerance)
        throw std::invalid_argument("pair distribution: entries must sum to 1");

    for (const auto& [pair, p] : entries_) {
        auto [u, v] = pair;
        if (u == v || p == 0.0) continue;
        incident_[u].push_back({v, p});
        incident_[v].push_back({u, p});
    }
    // Fold duplicate partners so delta evaluation touches each partner once.
    for (auto& inc : incident_) {
        std::sort(inc.begin(), inc.end());
        std::vector<std::pair<ProcessId, double>> folded;
        for (const auto& [w, p] : inc) {
            if (!folded.empty() && folded.back().first == w)
                folded.back().second += p;
            else
                folded.push_back({w, p});
        }
        inc = std::move(folded);
    }
    for (ProcessId u = 0; u < n_; ++u)
        if (marginals_[u] > 0.0) active_.push_back(u);
}

int distribution_size(const RequestDistribution& dist) {
    return std::visit([](const auto& d) { return d.size(); }, dist);
}

bool is_product(const RequestDistribution& dist) {
    return std::holds_alternative<ActivityDistribution>(dist);
}

ActivityDistribution product_distribution(const std::vector<double>& raw_activities) {
    double sum = 0.0;
    for (double p : raw_activities) {
        if (p < 0.0) throw std::invalid_argument("product_distribution: negative activity");
        sum += p;
    }
    if (sum <= 0.0) throw std::invalid_argument("product_distribution: all activities zero");
    std::vector<double> scaled(raw_activities.size());
    for (std::size_t u = 0; u < raw_activities.size(); ++u) scaled[u] = raw_activities[u] / sum;
    return ActivityDistribution(std::move(scaled));
}

ClusterSpec uniform_cluster_spec(int node_count, int cluster_count, int inactive_count) {
    if (cluster_count < 1) throw std::invalid_argument("cluster spec: need at least one cluster");
    if (inactive_count < 0 || inactive_count >= node_count)
        throw std::invalid_argument("cluster spec: bad inactive count");
    int budget = node_count - inactive_count;
    if (budget < cluster_count)
        throw std::invalid_argument("cluster spec: fewer active nodes than clusters");
    ClusterSpec spec;
    spec.node_count = node_count;
    int base = budget / cluster_count;
    int remainder = budget % cluster_count;
    ProcessId next = 0;
    for (int i = 0; i < cluster_count; ++i) {
        int size = base + (i < remainder ? 1 : 0);
        std::vector<ProcessId> members(size);
        std::iota(members.begin(), members.end(), next);
        next += size;
        spec.clusters.push_back(std::move(members));
        spec.weights.push_back(1.0 / cluster_count);
    }
    return spec;
}

PairDistribution clustered_distribution(const ClusterSpec& spec) {
    if (spec.clusters.size() != spec.weights.size())
        throw std::invalid_argument("cluster spec: clusters/weights size mismatch");
    double wsum = 0.0;
    for (double w : spec.weights) wsum += w;
    if (std::abs(wsum - 1.0) > kNormTolerance)
        throw std::invalid_argument("cluster spec: weights must sum to 1");

    std::vector<bool> seen(spec.node_count, false);
    std::map<std::pair<ProcessId, ProcessId>, double> entries;
    for (std::size_t i = 0; i < spec.clusters.size(); ++i) {
        const auto& members = spec.clusters[i];
        if (members.empty()) throw std::invalid_argument("cluster spec: empty cluster");
        for (ProcessId u : members) {
            if (u < 0 || u >= spec.node_count || seen[u])
                throw std::invalid_argument("cluster spec: clusters must be disjoint and in range");
            seen[u] = true;
        }
        double p = spec.weights[i] / (static_cast<double>(members.size()) * members.size());
        for (ProcessId u : members)
            for (ProcessId v : members) entries[{u, v}] = p;
    }
    return PairDistribution(spec.node_count, std::move(entries), /*symmetric=*/true);
}

std::vector<int> cluster_ids(const ClusterSpec& spec) {
    std::vector<int> ids(spec.node_count, 0);
    for (std::size_t i = 0; i < spec.clusters.size(); ++i)
        for (ProcessId u : spec.clusters[i]) ids[u] = static_cast<int>(i) + 1;
    return ids;
}

CliqueInstance clique_instance(int node_count, const std::vector<std::pair<int, int>>& edges,
                               int k) {
    if (k < 1 || k > node_count) throw std::invalid_argument("clique_instance: bad k");
    Topology host = Topology::general(node_count, edges);
    std::vector<double> activities(node_count, 0.0);
    for (int u = 0; u < k; ++u) activities[u] = 1.0 / k;
    return {std::move(host), ActivityDistribution(std::move(activities))};
}

TreeInstance tree_instance(const std::vector<std::pair<int, int>>& tree_edges) {
    int k = 0;
    for (const auto& [a, b] : tree_edges) k = std::max({k, a + 1, b + 1});
    if (k < 2 || static_cast<int>(tree_edges.size()) != k - 1)
        throw std::invalid_argument("tree_instance: edge count must be node count - 1");
    std::vector<int> degree(k, 0);
    for (const auto& [a, b] : tree_edges) {
        ++degree[a];
        ++degree[b];
    }
    for (int d : degree)
        if (d > 4) throw std::invalid_argument("tree_instance: max degree 4 exceeded");
    // Connectivity (plus the edge count above) certifies the input is a tree;
    // Topology::general throws on disconnected inputs.
    Topology::general(k, tree_edges);

    Topology host = Topology::grid(2, k);
    const int host_count = host.node_count();
    std::map<std::pair<ProcessId, ProcessId>, double> entries;
    double half_mass = 1.0 / (2.0 * (k - 1));
    for (const auto& [a, b] : tree_edges) {
        entries[{a, b}] = half_mass;
        entries[{b, a}] = half_mass;
    }
    return {std::move(host), PairDistribution(host_count, std::move(entries), /*symmetric=*/true)};
}

LineArrangement worst_case_line_arrangement(int dims, int side) {
    Topology host = Topology::grid(dims, side);
    const int n = host.node_count();
    std::vector<double> activities(n, 0.0);
    for (int i = 0; i < side; ++i) activities[i] = 1.0 / side;

    // Process i sits at coordinates (i, 0, ..., 0); inactive processes fill
    // the remaining hosts in ascending order.
    std::vector<HostId> forward(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> coords(dims, 0);
    for (int i = 0; i < side; ++i) {
        coords[0] = i;
        HostId h = host.encode(coords);
        forward[i] = h;
        used[h] = true;
    }
    HostId next = 0;
    for (ProcessId p = side; p < n; ++p) {
        while (used[next]) ++next;
        forward[p] = next;
        used[next] = true;
    }
    return {std::move(host), ActivityDistribution(std::move(activities)),
            Placement(std::move(forward))};
}

RingClusterInstance interleaved_ring_placement(int cluster_count, int k) {
    if (cluster_count < 2) throw std::invalid_argument("interleaved ring: need >= 2 clusters");
    if (k < 1) throw std::invalid_argument("interleaved ring: need k >= 1");
    const int cluster_size = 2 * k + 1;
    const int n = cluster_count * cluster_size;
    Topology host = Topology::ring(n);
    ClusterSpec spec = uniform_cluster_spec(n, cluster_count, 0);
    PairDistribution dist = clustered_distribution(spec);

    // Host h gets member (h div c) of cluster (h mod c); processes are
    // numbered cluster-major, so the contiguous placement is the identity.
    std::vector<HostId> forward(n);
    for (int cluster = 0; cluster < cluster_count; ++cluster)
        for (int member = 0; member < cluster_size; ++member)
            forward[cluster * cluster_size + member] = member * cluster_count + cluster;
    return {std::move(host), std::move(dist), Placement(std::move(forward)), std::move(spec)};
}

ActivityDistribution random_activities(int n, ActivityFamily family, double zipf_s,
                                       std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_activities: n must be >= 1");
    std::vector<double> raw(n);
    switch (family) {
        case ActivityFamily::uniform:
            std::fill(raw.begin(), raw.end(), 1.0);
            break;
        case ActivityFamily::zipf:
            for (int u = 0; u < n; ++u) raw[u] = 1.0 / std::pow(u + 1.0, zipf_s);
            break;
        case ActivityFamily::dirichlet_like: {
            Rng rng(seed);
            for (int u = 0; u < n; ++u) raw[u] = -std::log(1.0 - rng.next_double());
            break;
        }
    }
    return product_distribution(raw);
}

}  // namespace meplsim
