#include "meplsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <stdexcept>

#include "meplsim/rng.hpp"

namespace meplsim {

std::string to_string(Rule rule) { return rule == Rule::M ? "M" : "C"; }

std::string to_string(MoveSet move_set) {
    return move_set == MoveSet::adjacent ? "adjacent" : "adjacent+knight";
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// One dynamics run. Decision weights are the true activities in exact mode
// and the empirical estimates in online mode; the trace always records the
// true EPL (and true C for the C-rule).
class Engine {
public:
    Engine(const Topology& t, const RequestDistribution& dist, const Placement& initial,
           const DynamicsConfig& cfg)
        : t_(t), cfg_(cfg), pl_(initial), rng_(cfg.seed) {
        if (pl_.size() != t.node_count() || distribution_size(dist) != t.node_count())
            throw std::invalid_argument("dynamics: size mismatch");
        if (cfg.epsilon < 0.0) throw std::invalid_argument("dynamics: epsilon must be >= 0");
        if (cfg.move_set == MoveSet::adjacent_knight && !t.supports_knight_moves())
            throw std::invalid_argument("dynamics: knight moves need a 2-D grid or torus");

        if (is_product(dist)) {
            act_ = &std::get<ActivityDistribution>(dist);
            weights_ = act_->activities();
        } else {
            pairs_ = &std::get<PairDistribution>(dist);
            if (cfg.rule == Rule::C)
                throw std::invalid_argument("dynamics: C-rule needs a product distribution");
            if (cfg.mode == DynamicsMode::online)
                throw std::invalid_argument("dynamics: online mode needs a product distribution");
        }
        if (cfg.mode == DynamicsMode::online) {
            if (cfg.window_samples < 0)
                throw std::invalid_argument("dynamics: negative sample window");
            weights_.assign(t.node_count(), 0.0);
            counts_.assign(t.node_count(), 0);
            cdf_ = build_cdf(*act_);
        }

        epl_ = act_ ? epl(t_, *act_, pl_) : epl(t_, *pairs_, pl_);
        if (cfg.rule == Rule::C) refresh_center();
        trace_.rule = cfg.rule;
    }

    DynamicsResult run() {
        int sweep = 0;
        bool certified = false;
        while (sweep < cfg_.max_sweeps) {
            if (cfg_.mode == DynamicsMode::online) observe_window();
            int accepted = cfg_.schedule == Schedule::round_robin ? sweep_round_robin(sweep)
                                                                  : sweep_random(sweep);
            ++sweep;
            if (accepted == 0) {
                // A round-robin sweep with no accepted switch scanned every
                // candidate pair; the random schedule needs an explicit scan.
                certified = cfg_.schedule == Schedule::round_robin || scan_is_local_min();
                if (certified) break;
            }
        }
        trace_.sweeps = sweep;
        trace_.terminated = certified ? Termination::local_min : Termination::max_sweeps;
        return {pl_, std::move(trace_)};
    }

    double one_shot_delta(ProcessId u, ProcessId v) { return decision_delta(u, v); }

    bool scan_is_local_min() {
        for (HostId x = 0; x < t_.node_count(); ++x) {
            for (HostId y : moves(x)) {
                if (y <= x) continue;  // deltas are symmetric in (u,v)
                ProcessId u = pl_.process_at(x);
                ProcessId v = pl_.process_at(y);
                if (skippable(u, v)) continue;
                if (decision_delta(u, v) < -cfg_.epsilon) return false;
            }
        }
        return true;
    }

private:
    const std::vector<HostId>& moves(HostId x) const {
        return cfg_.move_set == MoveSet::adjacent ? t_.adjacent_neighbors(x)
                                                  : t_.extended_neighbors(x);
    }

    bool skippable(ProcessId u, ProcessId v) const {
        if (pairs_) return pairs_->marginal(u) == 0.0 && pairs_->marginal(v) == 0.0;
        return weights_[u] == 0.0 && weights_[v] == 0.0;
    }

    // EPL change of switching u and v, using the given per-process weights
    // (product form). Only terms involving u or v change.
    double product_m_delta(ProcessId u, ProcessId v, const std::vector<double>& w) const {
        const HostId x = pl_.host_of(u);
        const HostId y = pl_.host_of(v);
        double shift = 0.0;
        for (ProcessId z : act_->active()) {
            if (z == u || z == v) continue;
            const HostId hz = pl_.host_of(z);
            shift += w[z] * (t_.distance(y, hz) - t_.distance(x, hz));
        }
        return 2.0 * (w[u] - w[v]) * shift;
    }

    double pair_m_delta(ProcessId u, ProcessId v) const {
        const HostId x = pl_.host_of(u);
        const HostId y = pl_.host_of(v);
        double delta = 0.0;
        for (const auto& [z, mass] : pairs_->incident(u)) {
            if (z == v) continue;  // the u-v distance itself is unchanged
            const HostId hz = pl_.host_of(z);
            delta += mass * (t_.distance(y, hz) - t_.distance(x, hz));
        }
        for (const auto& [z, mass] : pairs_->incident(v)) {
            if (z == u) continue;
            const HostId hz = pl_.host_of(z);
            delta += mass * (t_.distance(x, hz) - t_.distance(y, hz));
        }
        return delta;
    }

    double decision_delta(ProcessId u, ProcessId v) const {
        if (cfg_.rule == Rule::C) {
            const HostId x = pl_.host_of(u);
            const HostId y = pl_.host_of(v);
            return (weights_[u] - weights_[v]) * (t_.distance(y, center_) - t_.distance(x, center_));
        }
        return pairs_ ? pair_m_delta(u, v) : product_m_delta(u, v, weights_);
    }

    void refresh_center() {
        // argmin over hosts of the weighted distance sum; lowest index wins ties.
        CenterResult best{0, std::numeric_limits<double>::infinity()};
        for (HostId x = 0; x < t_.node_count(); ++x) {
            double c = 0.0;
            for (ProcessId z : act_->active()) {
                if (weights_[z] != 0.0) c += weights_[z] * t_.distance(pl_.host_of(z), x);
            }
            if (c < best.c_value) best = {x, c};
        }
        center_ = best.center;
        c_value_ = best.c_value;
    }

    void accept(int sweep, ProcessId u, ProcessId v, double delta) {
        TraceStep step;
        step.sweep = sweep;
        step.step = static_cast<int>(trace_.steps.size());
        step.u = u;
        step.v = v;
        step.host_u = pl_.host_of(u);
        step.host_v = pl_.host_of(v);
        step.delta = delta;

        // True EPL update; in exact M-rule runs this equals delta.
        double true_epl_delta =
            pairs_ ? pair_m_delta(u, v) : product_m_delta(u, v, act_->activities());
        pl_.swap_processes(u, v);
        epl_ += true_epl_delta;
        step.epl_after = epl_;
        if (cfg_.rule == Rule::C) {
            refresh_center();
            step.c_after = cfg_.mode == DynamicsMode::online ? true_c_value() : c_value_;
        } else {
            step.c_after = std::numeric_limits<double>::quiet_NaN();
        }
        trace_.steps.push_back(step);
    }

    double true_c_value() const {
        double best = std::numeric_limits<double>::infinity();
        for (HostId x = 0; x < t_.node_count(); ++x) {
            double c = 0.0;
            for (ProcessId z : act_->active())
                c += act_->activity(z) * t_.distance(pl_.host_of(z), x);
            best = std::min(best, c);
        }
        return best;
    }

    int sweep_round_robin(int sweep) {
        int accepted = 0;
        for (ProcessId u = 0; u < pl_.size(); ++u) {
            const auto& candidates = moves(pl_.host_of(u));
            for (HostId y : candidates) {
                ProcessId v = pl_.process_at(y);
                if (skippable(u, v)) continue;
                double delta = decision_delta(u, v);
                if (delta < -cfg_.epsilon) {
                    accept(sweep, u, v, delta);
                    ++accepted;
                    break;  // u moved; its candidate list is stale
                }
            }
        }
        return accepted;
    }

    int sweep_random(int sweep) {
        int accepted = 0;
        for (int i = 0; i < pl_.size(); ++i) {
            ProcessId u = static_cast<ProcessId>(rng_.next_below(pl_.size()));
            const auto& candidates = moves(pl_.host_of(u));
            if (candidates.empty()) continue;
            HostId y = candidates[rng_.next_below(candidates.size())];
            ProcessId v = pl_.process_at(y);
            if (skippable(u, v)) continue;
            double delta = decision_delta(u, v);
            if (delta < -cfg_.epsilon) {
                accept(sweep, u, v, delta);
                ++accepted;
            }
        }
        return accepted;
    }

    static std::vector<double> build_cdf(const ActivityDistribution& act) {
        std::vector<double> cdf(act.size());
        double acc = 0.0;
        for (ProcessId u = 0; u < act.size(); ++u) {
            acc += act.activity(u);
            cdf[u] = acc;
        }
        cdf.back() = 1.0;
        return cdf;
    }

    ProcessId sample_process() {
        double r = rng_.next_double();
        auto it = std::lower_bound(cdf_.begin(), cdf_.end(), r);
        if (it == cdf_.end()) --it;
        return static_cast<ProcessId>(it - cdf_.begin());
    }

    // Draw the sweep's request window and refresh the empirical estimates:
    // each request (u,v) counts one participation for both endpoints.
    void observe_window() {
        for (std::int64_t i = 0; i < cfg_.window_samples; ++i) {
            ++counts_[sample_process()];
            ++counts_[sample_process()];
            ++total_endpoints_;
        }
        if (total_endpoints_ == 0) return;
        const double scale = 1.0 / (2.0 * static_cast<double>(total_endpoints_));
        for (ProcessId u = 0; u < static_cast<ProcessId>(weights_.size()); ++u)
            weights_[u] = static_cast<double>(counts_[u]) * scale;
        if (cfg_.rule == Rule::C) refresh_center();
    }

    const Topology& t_;
    DynamicsConfig cfg_;
    Placement pl_;
    Rng rng_;
    const ActivityDistribution* act_ = nullptr;
    const PairDistribution* pairs_ = nullptr;
    std::vector<double> weights_;  // decision weights, per process
    std::vector<std::int64_t> counts_;
    std::vector<double> cdf_;
    std::int64_t total_endpoints_ = 0;
    double epl_ = 0.0;
    HostId center_ = 0;
    double c_value_ = 0.0;
    DynamicsTrace trace_;
};

}  // namespace

double switch_delta(const Topology& t, const RequestDistribution& dist, const Placement& pl,
                    ProcessId u, ProcessId v, Rule rule) {
    if (u == v) throw std::invalid_argument("switch_delta: u and v must differ");
    DynamicsConfig cfg;
    cfg.rule = rule;
    cfg.move_set = MoveSet::adjacent;
    Engine engine(t, dist, pl, cfg);
    return engine.one_shot_delta(u, v);
}

DynamicsResult run_dynamics(const Topology& t, const RequestDistribution& dist,
                            const Placement& initial, const DynamicsConfig& cfg) {
    Engine engine(t, dist, initial, cfg);
    return engine.run();
}

bool is_local_minimum(const Topology& t, const RequestDistribution& dist, const Placement& pl,
                      Rule rule, MoveSet move_set, double epsilon) {
    DynamicsConfig cfg;
    cfg.rule = rule;
    cfg.move_set = move_set;
    cfg.epsilon = epsilon;
    Engine engine(t, dist, pl, cfg);
    return engine.scan_is_local_min();
}

std::vector<MonotoneViolation> verify_center_monotone(const Topology& t,
                                                      const RequestDistribution& dist,
                                                      const Placement& pl, MoveSet move_set,
                                                      double tolerance) {
    if (!is_product(dist))
        throw std::invalid_argument("verify_center_monotone: needs a product distribution");
    const auto& act = std::get<ActivityDistribution>(dist);
    if (pl.size() != t.node_count() || act.size() != t.node_count())
        throw std::invalid_argument("verify_center_monotone: size mismatch");
    if (move_set == MoveSet::adjacent_knight && !t.supports_knight_moves())
        throw std::invalid_argument("verify_center_monotone: knight moves need a 2-D grid/torus");

    const HostId center = expected_center(t, act, pl).center;
    const int n = t.node_count();

    // Directed edge x -> y whenever (x,y) is a legal switch move that goes
    // strictly closer to the center.
    std::vector<std::vector<HostId>> closer(n);
    for (HostId x = 0; x < n; ++x) {
        const auto& nbs = move_set == MoveSet::adjacent ? t.adjacent_neighbors(x)
                                                        : t.extended_neighbors(x);
        for (HostId y : nbs)
            if (t.distance(y, center) < t.distance(x, center)) closer[x].push_back(y);
    }

    std::vector<MonotoneViolation> violations;
    std::vector<bool> reached(n);
    std::deque<HostId> queue;
    for (HostId x = 0; x < n; ++x) {
        std::fill(reached.begin(), reached.end(), false);
        reached[x] = true;
        queue.assign(1, x);
        while (!queue.empty()) {
            HostId cur = queue.front();
            queue.pop_front();
            for (HostId y : closer[cur]) {
                if (!reached[y]) {
                    reached[y] = true;
                    queue.push_back(y);
                }
            }
        }
        const ProcessId u = pl.process_at(x);
        for (HostId y = 0; y < n; ++y) {
            if (y == x || !reached[y]) continue;
            const ProcessId v = pl.process_at(y);
            if (act.activity(u) > act.activity(v) + tolerance)
                violations.push_back({u, v, act.activity(u), act.activity(v)});
        }
    }
    return violations;
}

DynamicsResult run_online_dynamics(const Topology& t, const RequestDistribution& dist,
                                   const Placement& initial, const DynamicsConfig& cfg) {
    if (cfg.mode != DynamicsMode::online)
        throw std::invalid_argument("run_online_dynamics: config mode must be online");
    Engine engine(t, dist, initial, cfg);
    return engine.run();
}

std::string DynamicsTrace::to_csv() const {
    std::string out = "sweep,step,u,v,host_u,host_v,rule,delta,epl_after,c_after\n";
    for (const auto& s : steps) {
        out += std::to_string(s.sweep) + ',' + std::to_string(s.step) + ',' +
               std::to_string(s.u) + ',' + std::to_string(s.v) + ',' +
               std::to_string(s.host_u) + ',' + std::to_string(s.host_v) + ',' +
               to_string(rule) + ',' + format_double(s.delta) + ',' +
               format_double(s.epl_after) + ',';
        if (!std::isnan(s.c_after)) out += format_double(s.c_after);
        out += '\n';
    }
    return out;
}

}  // namespace meplsim
