#include "meplsim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "meplsim/metrics.hpp"
#include "meplsim/rng.hpp"

namespace meplsim {

using nlohmann::json;

int worker_count() {
    if (const char* env = std::getenv("MEPLSIM_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Rule parse_rule(const std::string& s) {
    if (s == "M") return Rule::M;
    if (s == "C") return Rule::C;
    throw std::invalid_argument("scenario: unknown rule '" + s + "'");
}

MoveSet parse_move_set(const std::string& s) {
    if (s == "adjacent") return MoveSet::adjacent;
    if (s == "adjacent+knight") return MoveSet::adjacent_knight;
    throw std::invalid_argument("scenario: unknown move_set '" + s + "'");
}

Schedule parse_schedule(const std::string& s) {
    if (s == "round_robin") return Schedule::round_robin;
    if (s == "random_pair") return Schedule::random_pair;
    throw std::invalid_argument("scenario: unknown schedule '" + s + "'");
}

Topology parse_topology(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "grid" || kind == "torus") {
        int d = j.at("d").get<int>();
        int k = j.at("k").get<int>();
        return kind == "grid" ? Topology::grid(d, k) : Topology::torus(d, k);
    }
    if (kind == "general") {
        std::vector<std::pair<int, int>> edges;
        int max_node = -1;
        for (const auto& e : j.at("edges")) {
            edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
            max_node = std::max({max_node, edges.back().first, edges.back().second});
        }
        int n = j.contains("n") ? j.at("n").get<int>() : max_node + 1;
        return Topology::general(n, edges);
    }
    throw std::invalid_argument("scenario: unknown topology kind '" + kind + "'");
}

ActivityFamily parse_family(const std::string& s) {
    if (s == "uniform") return ActivityFamily::uniform;
    if (s == "zipf") return ActivityFamily::zipf;
    if (s == "dirichlet") return ActivityFamily::dirichlet_like;
    throw std::invalid_argument("scenario: unknown activity family '" + s + "'");
}

DynamicsConfig parse_dynamics(const json& j) {
    DynamicsConfig cfg;
    if (j.contains("rule")) cfg.rule = parse_rule(j.at("rule").get<std::string>());
    if (j.contains("move_set")) cfg.move_set = parse_move_set(j.at("move_set").get<std::string>());
    if (j.contains("schedule")) cfg.schedule = parse_schedule(j.at("schedule").get<std::string>());
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("max_sweeps")) cfg.max_sweeps = j.at("max_sweeps").get<int>();
    if (j.contains("mode")) {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "exact") {
            cfg.mode = DynamicsMode::exact;
        } else if (mode == "online") {
            cfg.mode = DynamicsMode::online;
            cfg.window_samples = j.at("window_samples").get<std::int64_t>();
        } else {
            throw std::invalid_argument("scenario: unknown dynamics mode '" + mode + "'");
        }
    }
    return cfg;
}

}  // namespace

Scenario load_scenario(const std::string& json_text) {
    json j = json::parse(json_text);

    std::optional<Topology> topology;
    std::optional<RequestDistribution> distribution;
    std::optional<ClusterSpec> clusters;
    InitialPlacementSpec initial;

    if (j.contains("construction")) {
        const json& c = j.at("construction");
        const std::string name = c.at("name").get<std::string>();
        if (name == "worst_case_line") {
            auto inst = worst_case_line_arrangement(c.at("d").get<int>(), c.at("side").get<int>());
            topology = std::move(inst.topology);
            distribution = std::move(inst.distribution);
            initial.kind = InitialPlacementSpec::Kind::explicit_forward;
            initial.forward = inst.placement.forward();
        } else if (name == "interleaved_ring") {
            auto inst = interleaved_ring_placement(c.at("clusters").get<int>(), c.at("k").get<int>());
            topology = std::move(inst.topology);
            distribution = std::move(inst.distribution);
            clusters = std::move(inst.spec);
            initial.kind = InitialPlacementSpec::Kind::explicit_forward;
            initial.forward = inst.placement.forward();
        } else {
            throw std::invalid_argument("scenario: unknown construction '" + name + "'");
        }
        initial.kind = InitialPlacementSpec::Kind::construction;
    } else {
        topology = parse_topology(j.at("topology"));
        const json& d = j.at("distribution");
        const std::string kind = d.at("dist").get<std::string>();
        if (kind == "product") {
            if (d.contains("activities")) {
                distribution = product_distribution(d.at("activities").get<std::vector<double>>());
            } else {
                ActivityFamily family = parse_family(d.at("family").get<std::string>());
                double s = d.contains("s") ? d.at("s").get<double>() : 1.0;
                std::uint64_t seed = d.contains("seed") ? d.at("seed").get<std::uint64_t>() : 0;
                distribution = random_activities(topology->node_count(), family, s, seed);
            }
        } else if (kind == "clustered") {
            int c = d.at("clusters").get<int>();
            int inactive;
            if (d.contains("inactive")) {
                inactive = d.at("inactive").get<int>();
            } else if (d.contains("cluster_size")) {
                inactive = topology->node_count() - c * d.at("cluster_size").get<int>();
            } else {
                inactive = 0;
            }
            if (d.contains("weights") && d.at("weights").get<std::string>() != "uniform")
                throw std::invalid_argument("scenario: only uniform cluster weights supported");
            ClusterSpec spec = uniform_cluster_spec(topology->node_count(), c, inactive);
            distribution = clustered_distribution(spec);
            clusters = std::move(spec);
        } else {
            throw std::invalid_argument("scenario: unknown distribution '" + kind + "'");
        }

        if (j.contains("initial_placement")) {
            const json& ip = j.at("initial_placement");
            const std::string ik = ip.at("kind").get<std::string>();
            if (ik == "random") {
                initial.kind = InitialPlacementSpec::Kind::random;
            } else if (ik == "explicit") {
                initial.kind = InitialPlacementSpec::Kind::explicit_forward;
                initial.forward = ip.at("forward").get<std::vector<HostId>>();
            } else {
                throw std::invalid_argument("scenario: unknown initial placement '" + ik + "'");
            }
        }
    }

    Scenario s{std::move(*topology), std::move(*distribution), std::move(clusters),
               std::move(initial), parse_dynamics(j.contains("dynamics") ? j.at("dynamics")
                                                                         : json::object()),
               1, 0, "", {}, ""};
    if (j.contains("repetitions")) s.repetitions = j.at("repetitions").get<int>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output") && j.at("output").contains("dir"))
        s.out_dir = j.at("output").at("dir").get<std::string>();
    if (j.contains("oracle") && j.at("oracle").contains("max_active"))
        s.oracle_limits.max_active = j.at("oracle").at("max_active").get<int>();
    if (s.repetitions < 1) throw std::invalid_argument("scenario: repetitions must be >= 1");
    s.config_echo = j.dump();
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_scenario(text);
}

namespace {

Placement initial_placement_for_trial(const Scenario& s, int trial) {
    switch (s.initial.kind) {
        case InitialPlacementSpec::Kind::random: {
            std::vector<HostId> forward(s.topology.node_count());
            std::iota(forward.begin(), forward.end(), 0);
            Rng rng(derive_seed(s.seed, 0x10000 + trial));
            rng.shuffle(forward);
            return Placement(std::move(forward));
        }
        case InitialPlacementSpec::Kind::explicit_forward:
        case InitialPlacementSpec::Kind::construction:
            return Placement(s.initial.forward);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ScenarioArtifacts run_scenario(const Scenario& s) {
    ScenarioArtifacts artifacts;
    artifacts.trials.resize(s.repetitions);

    parallel_for(s.repetitions, [&](int trial) {
        TrialResult r;
        r.trial = trial;
        r.seed = derive_seed(s.seed, trial);
        r.initial_placement = initial_placement_for_trial(s, trial);
        r.initial_epl = epl(s.topology, s.distribution, r.initial_placement);

        DynamicsConfig cfg = s.dynamics;
        cfg.seed = r.seed;
        auto run = cfg.mode == DynamicsMode::online
                       ? run_online_dynamics(s.topology, s.distribution, r.initial_placement, cfg)
                       : run_dynamics(s.topology, s.distribution, r.initial_placement, cfg);
        r.final_placement = std::move(run.placement);
        r.final_epl = epl(s.topology, s.distribution, r.final_placement);
        r.sweeps = run.trace.sweeps;
        r.accepted_switches = static_cast<int>(run.trace.steps.size());
        r.terminated = run.trace.terminated;
        r.trace = std::move(run.trace);
        artifacts.trials[trial] = std::move(r);
    });

    json summary;
    summary["repetitions"] = s.repetitions;
    summary["seed"] = s.seed;
    summary["config"] = json::parse(s.config_echo.empty() ? "{}" : s.config_echo);
    if (s.clusters) {
        std::vector<std::size_t> sizes;
        for (const auto& members : s.clusters->clusters) sizes.push_back(members.size());
        summary["cluster_sizes"] = sizes;
        summary["inactive_count"] =
            s.topology.node_count() -
            static_cast<int>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}));
    }
    double mean_initial = 0.0;
    double mean_final = 0.0;
    double mean_ratio = 0.0;
    json trials = json::array();
    for (const auto& r : artifacts.trials) {
        json t;
        t["trial"] = r.trial;
        t["seed"] = r.seed;
        t["initial_epl"] = r.initial_epl;
        t["final_epl"] = r.final_epl;
        t["ratio"] = r.final_epl > 0.0 ? r.initial_epl / r.final_epl : 1.0;
        t["sweeps"] = r.sweeps;
        t["accepted_switches"] = r.accepted_switches;
        t["terminated"] = r.terminated == Termination::local_min ? "local_min" : "max_sweeps";
        trials.push_back(t);
        mean_initial += r.initial_epl;
        mean_final += r.final_epl;
        mean_ratio += t["ratio"].get<double>();
    }
    summary["trials"] = trials;
    summary["mean_initial_epl"] = mean_initial / s.repetitions;
    summary["mean_final_epl"] = mean_final / s.repetitions;
    summary["mean_ratio"] = mean_ratio / s.repetitions;
    artifacts.summary_json = summary.dump(2) + "\n";
    return artifacts;
}

std::string placement_snapshot_csv(const Topology& t, const ClusterSpec& clusters,
                                   const Placement& pl) {
    const std::vector<int> ids = cluster_ids(clusters);

    // Per-cluster center: member host with the minimal distance sum to the
    // other member hosts; lowest host index wins ties.
    std::vector<HostId> centers;
    for (const auto& members : clusters.clusters) {
        HostId best = -1;
        long long best_sum = std::numeric_limits<long long>::max();
        for (ProcessId u : members) {
            const HostId hu = pl.host_of(u);
            long long sum = 0;
            for (ProcessId v : members) sum += t.distance(hu, pl.host_of(v));
            if (sum < best_sum || (sum == best_sum && hu < best)) {
                best_sum = sum;
                best = hu;
            }
        }
        centers.push_back(best);
    }

    std::string out = "x,y,cluster_id,is_center\n";
    for (HostId h = 0; h < t.node_count(); ++h) {
        int x = h;
        int y = 0;
        if (t.kind() != TopologyKind::general && t.dims() >= 2) {
            x = t.coords(h)[0];
            y = t.coords(h)[1];
        }
        const int cluster = ids[pl.process_at(h)];
        const bool is_center = std::find(centers.begin(), centers.end(), h) != centers.end() &&
                               cluster != 0;
        out += std::to_string(x) + ',' + std::to_string(y) + ',' + std::to_string(cluster) + ',' +
               (is_center ? '1' : '0');
        out += '\n';
    }
    return out;
}

double mean_intra_cluster_distance(const Topology& t, const ClusterSpec& clusters,
                                   const Placement& pl) {
    double total = 0.0;
    int counted = 0;
    for (const auto& members : clusters.clusters) {
        if (members.size() < 2) continue;
        long long sum = 0;
        long long pairs = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                sum += t.distance(pl.host_of(members[i]), pl.host_of(members[j]));
                ++pairs;
            }
        }
        total += static_cast<double>(sum) / static_cast<double>(pairs);
        ++counted;
    }
    return counted == 0 ? 0.0 : total / counted;
}

std::vector<std::string> write_artifacts(const Scenario& s, const ScenarioArtifacts& artifacts) {
    if (s.out_dir.empty()) throw std::invalid_argument("write_artifacts: no output directory");
    std::filesystem::create_directories(s.out_dir);
    std::vector<std::string> written;
    auto write_file = [&](const std::string& name, const std::string& content) {
        const std::string path = s.out_dir + "/" + name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
        written.push_back(path);
    };
    for (const auto& r : artifacts.trials) {
        const std::string prefix = "trial_" + std::to_string(r.trial);
        write_file(prefix + "_trace.csv", r.trace.to_csv());
        if (s.clusters) {
            write_file(prefix + "_snapshot_initial.csv",
                       placement_snapshot_csv(s.topology, *s.clusters, r.initial_placement));
            write_file(prefix + "_snapshot_final.csv",
                       placement_snapshot_csv(s.topology, *s.clusters, r.final_placement));
        }
    }
    write_file("summary.json", artifacts.summary_json);
    return written;
}

std::vector<RatioCurvePoint> cluster_ratio_sweep(SweepTopology kind, int n,
                                                 const std::vector<int>& cluster_counts, int reps,
                                                 std::uint64_t seed, double inactive_fraction) {
    if (reps < 1) throw std::invalid_argument("sweep: reps must be >= 1");
    if (inactive_fraction < 0.0 || inactive_fraction >= 1.0)
        throw std::invalid_argument("sweep: inactive fraction must be in [0,1)");
    Topology topology = [&] {
        if (kind == SweepTopology::torus) {
            int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
            if (side * side != n)
                throw std::invalid_argument("sweep: torus node count must be a square");
            return Topology::torus(2, side);
        }
        return Topology::ring(n);
    }();

    std::vector<RatioCurvePoint> points;
    for (std::size_t idx = 0; idx < cluster_counts.size(); ++idx) {
        const int c = cluster_counts[idx];
        const int inactive = static_cast<int>(std::llround(n * inactive_fraction));
        ClusterSpec spec = uniform_cluster_spec(n, c, inactive);
        RequestDistribution dist = clustered_distribution(spec);

        std::vector<double> ratios(reps);
        std::vector<double> initials(reps);
        std::vector<double> finals(reps);
        parallel_for(reps, [&](int rep) {
            std::vector<HostId> forward(n);
            std::iota(forward.begin(), forward.end(), 0);
            Rng rng(derive_seed(seed, idx * 10007 + rep));
            rng.shuffle(forward);
            Placement start(std::move(forward));

            DynamicsConfig cfg;
            cfg.rule = Rule::M;
            cfg.move_set = MoveSet::adjacent;
            cfg.seed = derive_seed(seed, 0x5eed0000 + idx * 10007 + rep);
            auto run = run_dynamics(topology, dist, start, cfg);
            initials[rep] = epl(topology, dist, start);
            finals[rep] = epl(topology, dist, run.placement);
            ratios[rep] = finals[rep] > 0.0 ? initials[rep] / finals[rep] : 1.0;
        });

        RatioCurvePoint point;
        point.cluster_count = c;
        point.repetitions = reps;
        point.mean_initial_epl = std::accumulate(initials.begin(), initials.end(), 0.0) / reps;
        point.mean_final_epl = std::accumulate(finals.begin(), finals.end(), 0.0) / reps;
        point.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) / reps;
        double var = 0.0;
        for (double r : ratios) var += (r - point.mean_ratio) * (r - point.mean_ratio);
        point.std_ratio = reps > 1 ? std::sqrt(var / (reps - 1)) : 0.0;
        points.push_back(point);
    }
    return points;
}

std::string ratio_curve_csv(const std::vector<RatioCurvePoint>& points) {
    std::string out =
        "cluster_count,mean_initial_epl,mean_final_epl,mean_ratio,std_ratio,repetitions\n";
    for (const auto& p : points) {
        out += std::to_string(p.cluster_count) + ',' + format_double(p.mean_initial_epl) + ',' +
               format_double(p.mean_final_epl) + ',' + format_double(p.mean_ratio) + ',' +
               format_double(p.std_ratio) + ',' + std::to_string(p.repetitions) + '\n';
    }
    return out;
}

}  // namespace meplsim
