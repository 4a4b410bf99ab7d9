#include "meplsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace meplsim {

double epl(const Topology& t, const ActivityDistribution& dist, const Placement& pl) {
    if (dist.size() != t.node_count() || pl.size() != t.node_count())
        throw std::invalid_argument("epl: size mismatch");
    const auto& active = dist.active();
    double total = 0.0;
    for (std::size_t i = 0; i < active.size(); ++i) {
        ProcessId u = active[i];
        const HostId hu = pl.host_of(u);
        double row = 0.0;
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            ProcessId v = active[j];
            row += dist.activity(v) * t.distance(hu, pl.host_of(v));
        }
        total += 2.0 * dist.activity(u) * row;  // ordered pairs; self terms are 0
    }
    return total;
}

double epl(const Topology& t, const PairDistribution& dist, const Placement& pl) {
    if (dist.size() != t.node_count() || pl.size() != t.node_count())
        throw std::invalid_argument("epl: size mismatch");
    // Compensated summation: the ring analytics are checked at 1e-12 and the
    // clustered instances sum tens of thousands of equal-magnitude terms.
    double total = 0.0;
    double carry = 0.0;
    for (const auto& [pair, p] : dist.entries()) {
        auto [u, v] = pair;
        if (u == v) continue;
        double term = p * t.distance(pl.host_of(u), pl.host_of(v)) - carry;
        double next = total + term;
        carry = (next - total) - term;
        total = next;
    }
    return total;
}

double epl(const Topology& t, const RequestDistribution& dist, const Placement& pl) {
    return std::visit([&](const auto& d) { return epl(t, d, pl); }, dist);
}

CenterResult expected_center(const Topology& t, const ActivityDistribution& dist,
                             const Placement& pl) {
    if (dist.size() != t.node_count() || pl.size() != t.node_count())
        throw std::invalid_argument("expected_center: size mismatch");
    const auto& active = dist.active();
    CenterResult best{0, std::numeric_limits<double>::infinity()};
    for (HostId x = 0; x < t.node_count(); ++x) {
        double c = 0.0;
        for (ProcessId u : active) c += dist.activity(u) * t.distance(pl.host_of(u), x);
        if (c < best.c_value) best = {x, c};
    }
    if (active.empty()) best = {0, 0.0};
    return best;
}

std::vector<int> ranks(const ActivityDistribution& dist) {
    const int n = dist.size();
    std::vector<ProcessId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](ProcessId a, ProcessId b) {
        return dist.activity(a) > dist.activity(b);
    });
    std::vector<int> rank(n);
    for (int pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    return rank;
}

double expected_rank(const ActivityDistribution& dist) {
    const auto r = ranks(dist);
    double total = 0.0;
    for (ProcessId u = 0; u < dist.size(); ++u) total += dist.activity(u) * r[u];
    return total;
}

double expected_sqrt_rank(const ActivityDistribution& dist) {
    const auto r = ranks(dist);
    double total = 0.0;
    for (ProcessId u = 0; u < dist.size(); ++u)
        total += dist.activity(u) * std::sqrt(static_cast<double>(r[u]));
    return total;
}

std::string to_string(BoundContext ctx) {
    switch (ctx) {
        case BoundContext::line: return "line";
        case BoundContext::grid2d: return "grid2d";
        case BoundContext::none: return "none";
    }
    return "?";
}

BoundReport bound_report(const Topology& t, const RequestDistribution& dist, const Placement& pl,
                         BoundContext context, bool local_minimum_certified) {
    if (!is_product(dist))
        throw std::invalid_argument("bound_report: unsupported for pair distributions");
    const auto& act = std::get<ActivityDistribution>(dist);

    BoundReport rep;
    rep.context = context;
    rep.local_minimum_certified = local_minimum_certified;
    rep.epl = epl(t, act, pl);
    auto center = expected_center(t, act, pl);
    rep.center = center.center;
    rep.c_value = center.c_value;
    rep.expected_rank = expected_rank(act);
    rep.expected_sqrt_rank = expected_sqrt_rank(act);
    rep.sandwich_ok = rep.c_value <= rep.epl + kMetricTolerance &&
                      rep.epl <= 2.0 * rep.c_value + kMetricTolerance;
    rep.upper_2ER = 2.0 * rep.expected_rank;
    rep.upper_4div_sqrt6 = 4.0 / std::sqrt(6.0) * rep.expected_sqrt_rank;
    rep.lower_half_ER = 0.5 * rep.expected_rank;
    rep.lower_inv_sqrt2 = rep.expected_sqrt_rank / std::sqrt(2.0);
    rep.upper_2ER_applies = context == BoundContext::line && local_minimum_certified;
    rep.upper_4div_sqrt6_applies = context == BoundContext::grid2d && local_minimum_certified;
    rep.lower_half_ER_applies = context == BoundContext::line;
    rep.lower_inv_sqrt2_applies = context == BoundContext::grid2d;
    return rep;
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["epl"] = epl;
    j["c_value"] = c_value;
    j["center"] = center;
    j["expected_rank"] = expected_rank;
    j["expected_sqrt_rank"] = expected_sqrt_rank;
    j["sandwich_ok"] = sandwich_ok;
    j["upper_2ER"] = upper_2ER;
    j["upper_4div_sqrt6"] = upper_4div_sqrt6;
    j["lower_half_ER"] = lower_half_ER;
    j["lower_inv_sqrt2"] = lower_inv_sqrt2;
    j["context"] = to_string(context);
    j["local_minimum_certified"] = local_minimum_certified;
    j["upper_2ER_applies"] = upper_2ER_applies;
    j["upper_4div_sqrt6_applies"] = upper_4div_sqrt6_applies;
    j["lower_half_ER_applies"] = lower_half_ER_applies;
    j["lower_inv_sqrt2_applies"] = lower_inv_sqrt2_applies;
    return j.dump(2);
}

}  // namespace meplsim
