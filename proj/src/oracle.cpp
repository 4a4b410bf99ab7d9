#include "meplsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "meplsim/metrics.hpp"
#include "meplsim/rng.hpp"

namespace meplsim {

namespace {

// Exhaustive iterator over injections of the active processes into hosts.
// Assignment order puts equal-activity processes (product mode) next to each
// other so their hosts can be forced ascending, collapsing symmetric
// placements; host choices are tried in ascending order, which makes the
// first optimum found the lexicographically smallest.
class PlacementEnumerator {
public:
    PlacementEnumerator(const Topology& t, const RequestDistribution& dist,
                        const OracleLimits& limits)
        : t_(t), n_(t.node_count()) {
        if (distribution_size(dist) != n_)
            throw std::invalid_argument("oracle: size mismatch");
        if (is_product(dist)) {
            act_ = &std::get<ActivityDistribution>(dist);
            order_ = act_->active();
            weights_.assign(n_, 0.0);
            for (ProcessId u : order_) weights_[u] = act_->activity(u);
            std::stable_sort(order_.begin(), order_.end(), [&](ProcessId a, ProcessId b) {
                return weights_[a] > weights_[b];
            });
        } else {
            pairs_ = &std::get<PairDistribution>(dist);
            order_ = pairs_->active();
        }
        const int active = static_cast<int>(order_.size());
        if (active > limits.max_active)
            throw std::invalid_argument("oracle: instance exceeds active-process limit");

        same_group_.assign(active, false);
        double total = 1.0;
        double group_factor = 1.0;
        double group_size = 1.0;
        for (int i = 0; i < active; ++i) {
            total *= static_cast<double>(n_ - i);
            if (act_ && i > 0 && weights_[order_[i]] == weights_[order_[i - 1]]) {
                same_group_[i] = true;
                group_size += 1.0;
                group_factor *= group_size;
            } else {
                group_size = 1.0;
            }
        }
        if (total / group_factor > static_cast<double>(limits.max_placements))
            throw std::invalid_argument("oracle: instance exceeds placement-count limit");

        dist_matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (HostId a = 0; a < n_; ++a)
            for (HostId b = 0; b < n_; ++b)
                dist_matrix_[static_cast<std::size_t>(a) * n_ + b] =
                    static_cast<std::uint16_t>(t.distance(a, b));
    }

    const std::vector<ProcessId>& order() const { return order_; }
    int active_count() const { return static_cast<int>(order_.size()); }
    bool product() const { return act_ != nullptr; }
    const std::vector<double>& weights() const { return weights_; }
    const PairDistribution* pair_distribution() const { return pairs_; }

    int host_distance(HostId a, HostId b) const {
        return dist_matrix_[static_cast<std::size_t>(a) * n_ + b];
    }

    /// visit(partial_epl, hosts) is called for every complete assignment;
    /// hosts[i] is the host of order()[i]. When prune_bound is non-null,
    /// subtrees whose partial EPL already reaches *prune_bound are skipped
    /// (valid because every further contribution is nonnegative).
    template <typename Visit>
    long long run(const double* prune_bound, Visit&& visit) {
        const int active = active_count();
        assigned_.assign(active, -1);
        used_.assign(n_, false);
        proc_host_.assign(n_, -1);
        leaves_ = 0;
        if (active == 0) {
            visit(0.0, assigned_);
            return 1;
        }
        descend(0, 0.0, prune_bound, visit);
        return leaves_;
    }

    /// Full placement from an active-host assignment: inactive processes
    /// fill the unused hosts in ascending order.
    Placement build_full_placement(const std::vector<HostId>& hosts) const {
        std::vector<HostId> forward(n_, -1);
        std::vector<bool> used(n_, false);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            forward[order_[i]] = hosts[i];
            used[hosts[i]] = true;
        }
        HostId next = 0;
        for (ProcessId p = 0; p < n_; ++p) {
            if (forward[p] != -1) continue;
            while (used[next]) ++next;
            forward[p] = next;
            used[next] = true;
        }
        return Placement(std::move(forward));
    }

private:
    template <typename Visit>
    void descend(int depth, double partial, const double* prune_bound, Visit&& visit) {
        const ProcessId u = order_[depth];
        const HostId floor_host = same_group_[depth] ? assigned_[depth - 1] + 1 : 0;
        for (HostId h = floor_host; h < n_; ++h) {
            if (used_[h]) continue;
            double contribution = 0.0;
            if (act_) {
                double sum = 0.0;
                for (int j = 0; j < depth; ++j)
                    sum += weights_[order_[j]] * host_distance(h, assigned_[j]);
                contribution = 2.0 * weights_[u] * sum;
            } else {
                for (const auto& [w, mass] : pairs_->incident(u)) {
                    HostId hw = proc_host_[w];
                    if (hw != -1) contribution += mass * host_distance(h, hw);
                }
            }
            double epl_here = partial + contribution;
            if (prune_bound && epl_here >= *prune_bound) continue;
            assigned_[depth] = h;
            used_[h] = true;
            proc_host_[u] = h;
            if (depth + 1 == active_count()) {
                ++leaves_;
                visit(epl_here, assigned_);
            } else {
                descend(depth + 1, epl_here, prune_bound, visit);
            }
            proc_host_[u] = -1;
            used_[h] = false;
            assigned_[depth] = -1;
        }
    }

    const Topology& t_;
    int n_;
    const ActivityDistribution* act_ = nullptr;
    const PairDistribution* pairs_ = nullptr;
    std::vector<ProcessId> order_;
    std::vector<double> weights_;
    std::vector<char> same_group_;
    std::vector<std::uint16_t> dist_matrix_;
    std::vector<HostId> assigned_;
    std::vector<bool> used_;
    std::vector<HostId> proc_host_;  // process -> host or -1
    long long leaves_ = 0;
};

// Local-minimum test on an active-host assignment without materializing the
// full placement. Inactive processes are interchangeable, so the property
// only depends on where the active ones sit.
class AssignmentLocalMinCheck {
public:
    AssignmentLocalMinCheck(const Topology& t, const PlacementEnumerator& en, Rule rule,
                            MoveSet move_set, double epsilon)
        : t_(t), en_(en), rule_(rule), epsilon_(epsilon) {
        if (move_set == MoveSet::adjacent_knight && !t.supports_knight_moves())
            throw std::invalid_argument("oracle: knight moves need a 2-D grid or torus");
        if (rule == Rule::C && !en.product())
            throw std::invalid_argument("oracle: C-rule needs a product distribution");
        for (HostId x = 0; x < t.node_count(); ++x) {
            const auto& nbs = move_set == MoveSet::adjacent ? t.adjacent_neighbors(x)
                                                            : t.extended_neighbors(x);
            for (HostId y : nbs)
                if (y > x) move_pairs_.push_back({x, y});
        }
        host_weight_.assign(t.node_count(), 0.0);
        host_proc_.assign(t.node_count(), -1);
        proc_pos_.assign(t.node_count(), -1);
    }

    bool is_local_min(const std::vector<HostId>& hosts) {
        const auto& order = en_.order();
        for (std::size_t i = 0; i < order.size(); ++i) {
            host_proc_[hosts[i]] = order[i];
            proc_pos_[order[i]] = hosts[i];
            if (en_.product()) host_weight_[hosts[i]] = en_.weights()[order[i]];
        }
        bool result = true;
        const HostId center = rule_ == Rule::C ? compute_center(hosts) : 0;
        for (const auto& [x, y] : move_pairs_) {
            double delta;
            if (rule_ == Rule::C) {
                delta = (host_weight_[x] - host_weight_[y]) *
                        (en_.host_distance(y, center) - en_.host_distance(x, center));
            } else if (en_.product()) {
                delta = product_m_delta(x, y, hosts);
            } else {
                delta = pair_m_delta(x, y);
            }
            if (delta < -epsilon_) {
                result = false;
                break;
            }
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            host_proc_[hosts[i]] = -1;
            proc_pos_[order[i]] = -1;
            host_weight_[hosts[i]] = 0.0;
        }
        return result;
    }

private:
    HostId compute_center(const std::vector<HostId>& hosts) const {
        HostId best = 0;
        double best_c = std::numeric_limits<double>::infinity();
        const auto& order = en_.order();
        for (HostId x = 0; x < t_.node_count(); ++x) {
            double c = 0.0;
            for (std::size_t i = 0; i < order.size(); ++i)
                c += en_.weights()[order[i]] * en_.host_distance(hosts[i], x);
            if (c < best_c) {
                best_c = c;
                best = x;
            }
        }
        return best;
    }

    double product_m_delta(HostId x, HostId y, const std::vector<HostId>& hosts) const {
        const double wx = host_weight_[x];
        const double wy = host_weight_[y];
        if (wx == wy) return 0.0;
        double shift = 0.0;
        for (HostId hz : hosts) {
            if (hz == x || hz == y) continue;
            shift += host_weight_[hz] * (en_.host_distance(y, hz) - en_.host_distance(x, hz));
        }
        return 2.0 * (wx - wy) * shift;
    }

    double pair_m_delta(HostId x, HostId y) const {
        const auto* pairs = en_.pair_distribution();
        double delta = 0.0;
        if (ProcessId u = host_proc_[x]; u != -1) {
            for (const auto& [z, mass] : pairs->incident(u)) {
                HostId hz = proc_pos_[z];
                if (hz == y) continue;
                delta += mass * (en_.host_distance(y, hz) - en_.host_distance(x, hz));
            }
        }
        if (ProcessId v = host_proc_[y]; v != -1) {
            for (const auto& [z, mass] : pairs->incident(v)) {
                HostId hz = proc_pos_[z];
                if (hz == x) continue;
                delta += mass * (en_.host_distance(x, hz) - en_.host_distance(y, hz));
            }
        }
        return delta;
    }

    const Topology& t_;
    const PlacementEnumerator& en_;
    Rule rule_;
    double epsilon_;
    std::vector<std::pair<HostId, HostId>> move_pairs_;
    std::vector<double> host_weight_;
    std::vector<ProcessId> host_proc_;
    std::vector<HostId> proc_pos_;
};

}  // namespace

OracleResult brute_force_mepl(const Topology& t, const RequestDistribution& dist,
                              const OracleLimits& limits, bool compute_c_min) {
    if (compute_c_min && !is_product(dist))
        throw std::invalid_argument("oracle: C_min needs a product distribution");
    PlacementEnumerator en(t, dist, limits);

    double best = std::numeric_limits<double>::infinity();
    double best_c = std::numeric_limits<double>::infinity();
    std::vector<HostId> best_hosts(en.active_count(), 0);
    const double* prune = compute_c_min ? nullptr : &best;

    long long leaves = en.run(prune, [&](double value, const std::vector<HostId>& hosts) {
        if (value < best) {
            best = value;
            best_hosts = hosts;
        }
        if (compute_c_min) {
            double c = std::numeric_limits<double>::infinity();
            const auto& order = en.order();
            for (HostId x = 0; x < t.node_count(); ++x) {
                double acc = 0.0;
                for (std::size_t i = 0; i < order.size(); ++i)
                    acc += en.weights()[order[i]] * en.host_distance(hosts[i], x);
                c = std::min(c, acc);
            }
            best_c = std::min(best_c, c);
        }
    });

    OracleResult result;
    result.mepl_value = en.active_count() == 0 ? 0.0 : best;
    result.optimal_placement = en.build_full_placement(best_hosts);
    result.explored_count = leaves;
    result.c_min_computed = compute_c_min;
    result.c_min = compute_c_min ? (en.active_count() == 0 ? 0.0 : best_c) : 0.0;
    return result;
}

std::vector<LocalMinimumRecord> enumerate_local_minima(const Topology& t,
                                                       const RequestDistribution& dist, Rule rule,
                                                       MoveSet move_set, double epsilon,
                                                       const OracleLimits& limits) {
    PlacementEnumerator en(t, dist, limits);
    AssignmentLocalMinCheck check(t, en, rule, move_set, epsilon);

    std::vector<LocalMinimumRecord> minima;
    en.run(nullptr, [&](double value, const std::vector<HostId>& hosts) {
        if (check.is_local_min(hosts)) minima.push_back({en.build_full_placement(hosts), value});
    });
    std::sort(minima.begin(), minima.end(), [](const LocalMinimumRecord& a,
                                               const LocalMinimumRecord& b) {
        if (a.epl != b.epl) return a.epl > b.epl;
        return a.placement.forward() < b.placement.forward();
    });
    return minima;
}

long long triangle_count(double x) {
    if (x < 0.0) throw std::invalid_argument("triangle_count: x must be nonnegative");
    const long long floor_x = static_cast<long long>(std::floor(x));
    const long long half = static_cast<long long>(std::floor(x / 2.0));
    long long total = 0;
    for (long long i = 0; i <= half; ++i) total += floor_x + 1 - 2 * i;
    return total;
}

long long polygon_rank_bound(long long a, long long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("polygon_rank_bound: a, b must be >= 1");
    const long long s1 = (a - 1) * (b - 1);
    const long long s2 = triangle_count(static_cast<double>(a - 1));
    const long long s3 = triangle_count(static_cast<double>(b) + static_cast<double>(a) / 2.0);
    const long long s4 = triangle_count(static_cast<double>(a) + static_cast<double>(b) / 2.0);
    const long long s5 = triangle_count(static_cast<double>(b - 1));
    return s1 + s2 + s3 + s4 + s5 - 3;
}

RingClusterAnalytics ring_cluster_analytics(int cluster_count, int k) {
    if (cluster_count < 2) throw std::invalid_argument("ring analytics: need >= 2 clusters");
    if (k < 1) throw std::invalid_argument("ring analytics: need k >= 1");
    const long long c = cluster_count;
    const long long m = 2LL * k + 1;
    Rational interleaved(c * k * (k + 1), m);
    Rational contiguous(static_cast<long long>(k) * (2LL * k + 2), 3 * m);
    return {interleaved, contiguous, interleaved / contiguous};
}

RatioStudy approximation_ratio_study(const Topology& t, ActivityFamily family, double zipf_s,
                                     Rule rule, MoveSet move_set, int trials, std::uint64_t seed,
                                     const OracleLimits& limits) {
    if (trials < 1) throw std::invalid_argument("ratio study: trials must be >= 1");
    RatioStudy study;
    study.trials = trials;
    double sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        ActivityDistribution act = random_activities(t.node_count(), family, zipf_s,
                                                     derive_seed(seed, 2 * trial));
        RequestDistribution dist = act;

        std::vector<HostId> forward(t.node_count());
        std::iota(forward.begin(), forward.end(), 0);
        Rng rng(derive_seed(seed, 2 * trial + 1));
        rng.shuffle(forward);
        Placement start(std::move(forward));

        DynamicsConfig cfg;
        cfg.rule = rule;
        cfg.move_set = move_set;
        auto run = run_dynamics(t, dist, start, cfg);
        double local = epl(t, act, run.placement);
        double optimum = brute_force_mepl(t, dist, limits).mepl_value;

        double ratio;
        if (optimum > 0.0)
            ratio = local / optimum;
        else if (local <= kMetricTolerance)
            ratio = 1.0;
        else
            throw std::runtime_error("ratio study: zero optimum with nonzero local minimum");
        study.ratios.push_back(ratio);
        study.max_ratio = std::max(study.max_ratio, ratio);
        sum += ratio;

        std::size_t bin = ratio < 1.0 ? 0 : static_cast<std::size_t>((ratio - 1.0) / 0.25);
        if (study.histogram.size() <= bin) study.histogram.resize(bin + 1, 0);
        ++study.histogram[bin];
    }
    study.mean_ratio = sum / trials;
    return study;
}

}  // namespace meplsim
