#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace meplsim {

using HostId = std::int32_t;
using ProcessId = std::int32_t;

enum class TopologyKind { grid, torus, general };

std::string to_string(TopologyKind kind);

// Host graph with a shortest-path metric and the switch move sets used by the
// dynamics. Grids and tori are d-dimensional meshes of side k (a line is a
// grid with d=1, a ring a torus with d=1); general graphs are given as edge
// lists and must be connected.
//
// Coordinate encoding is row-major: axis 0 is the slowest-varying, axis d-1
// the fastest, so host index = ((c0*k + c1)*k + c2)*k + ... This is fixed so
// traces and snapshots are reproducible bit for bit.
class Topology {
public:
    static Topology grid(int dims, int side);
    static Topology torus(int dims, int side);
    static Topology line(int length) { return grid(1, length); }
    static Topology ring(int length) { return torus(1, length); }
    static Topology general(int node_count, const std::vector<std::pair<int, int>>& edges);

    TopologyKind kind() const { return kind_; }
    int dims() const { return dims_; }
    int side() const { return side_; }
    int node_count() const { return node_count_; }

    bool valid_host(HostId h) const { return h >= 0 && h < node_count_; }

    /// Coordinates of a host (grid/torus only), length dims().
    const std::vector<int>& coords(HostId h) const { return coords_[h]; }
    HostId encode(const std::vector<int>& coords) const;

    int distance(HostId a, HostId b) const;

    /// Hosts at graph distance exactly 1, ascending index.
    const std::vector<HostId>& adjacent_neighbors(HostId h) const { return adjacent_[h]; }

    /// Hosts reachable by a chess-knight offset (2 in one axis, 1 in the
    /// other). Only defined on 2-dimensional grids and tori; offsets are
    /// clipped at grid boundaries and wrapped (then deduplicated, self
    /// excluded) on the torus. Ascending index.
    const std::vector<HostId>& knight_neighbors(HostId h) const;

    /// adjacent_neighbors plus knight_neighbors, deduplicated, ascending.
    const std::vector<HostId>& extended_neighbors(HostId h) const;

    bool supports_knight_moves() const {
        return dims_ == 2 && (kind_ == TopologyKind::grid || kind_ == TopologyKind::torus);
    }

private:
    Topology() = default;
    void build_mesh(TopologyKind kind, int dims, int side);
    void build_knight_sets();

    TopologyKind kind_ = TopologyKind::grid;
    int dims_ = 0;
    int side_ = 0;
    int node_count_ = 0;
    std::vector<std::vector<int>> coords_;
    std::vector<std::vector<HostId>> adjacent_;
    std::vector<std::vector<HostId>> knight_;
    std::vector<std::vector<HostId>> extended_;
    // All-pairs distances, general kind only (row-major n*n).
    std::vector<std::uint16_t> dist_table_;
};

}  // namespace meplsim
