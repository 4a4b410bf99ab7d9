#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "meplsim/topology.hpp"

namespace meplsim {

// Bijection between processes (guest nodes) and hosts. Both directions are
// materialized so dynamics can look up "who sits at host h" in O(1).
class Placement {
public:
    Placement() = default;

    static Placement identity(int n) {
        std::vector<HostId> fwd(n);
        for (int i = 0; i < n; ++i) fwd[i] = i;
        return Placement(std::move(fwd));
    }

    explicit Placement(std::vector<HostId> forward) : forward_(std::move(forward)) {
        const int n = static_cast<int>(forward_.size());
        inverse_.assign(n, -1);
        for (ProcessId p = 0; p < n; ++p) {
            HostId h = forward_[p];
            if (h < 0 || h >= n || inverse_[h] != -1)
                throw std::invalid_argument("placement: forward map is not a bijection");
            inverse_[h] = p;
        }
    }

    int size() const { return static_cast<int>(forward_.size()); }
    HostId host_of(ProcessId p) const { return forward_[p]; }
    ProcessId process_at(HostId h) const { return inverse_[h]; }
    const std::vector<HostId>& forward() const { return forward_; }

    void swap_processes(ProcessId u, ProcessId v) {
        std::swap(forward_[u], forward_[v]);
        inverse_[forward_[u]] = u;
        inverse_[forward_[v]] = v;
    }

    bool operator==(const Placement& other) const { return forward_ == other.forward_; }

private:
    std::vector<HostId> forward_;
    std::vector<ProcessId> inverse_;
};

}  // namespace meplsim
