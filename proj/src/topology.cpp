#include "meplsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace meplsim {

std::string to_string(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::grid: return "grid";
        case TopologyKind::torus: return "torus";
        case TopologyKind::general: return "general";
    }
    return "?";
}

Topology Topology::grid(int dims, int side) {
    Topology t;
    t.build_mesh(TopologyKind::grid, dims, side);
    return t;
}

Topology Topology::torus(int dims, int side) {
    Topology t;
    t.build_mesh(TopologyKind::torus, dims, side);
    return t;
}

void Topology::build_mesh(TopologyKind kind, int dims, int side) {
    if (dims < 1) throw std::invalid_argument("topology: dims must be >= 1");
    if (side < 1) throw std::invalid_argument("topology: side must be >= 1");
    double count = std::pow(static_cast<double>(side), dims);
    if (count > 1e7) throw std::invalid_argument("topology: k^d too large");

    kind_ = kind;
    dims_ = dims;
    side_ = side;
    node_count_ = 1;
    for (int a = 0; a < dims; ++a) node_count_ *= side;

    coords_.assign(node_count_, std::vector<int>(dims, 0));
    for (HostId h = 0; h < node_count_; ++h) {
        int rem = h;
        for (int a = dims - 1; a >= 0; --a) {
            coords_[h][a] = rem % side;
            rem /= side;
        }
    }

    adjacent_.assign(node_count_, {});
    std::vector<int> c(dims);
    for (HostId h = 0; h < node_count_; ++h) {
        for (int a = 0; a < dims; ++a) {
            for (int step : {-1, +1}) {
                c = coords_[h];
                int moved = c[a] + step;
                if (kind == TopologyKind::torus) {
                    moved = ((moved % side) + side) % side;
                } else if (moved < 0 || moved >= side) {
                    continue;
                }
                c[a] = moved;
                HostId nb = encode(c);
                if (nb != h) adjacent_[h].push_back(nb);
            }
        }
        std::sort(adjacent_[h].begin(), adjacent_[h].end());
        adjacent_[h].erase(std::unique(adjacent_[h].begin(), adjacent_[h].end()),
                           adjacent_[h].end());
    }

    if (supports_knight_moves()) build_knight_sets();
}

void Topology::build_knight_sets() {
    static const int offsets[8][2] = {{1, 2},  {1, -2},  {-1, 2},  {-1, -2},
                                      {2, 1},  {2, -1},  {-2, 1},  {-2, -1}};
    knight_.assign(node_count_, {});
    extended_.assign(node_count_, {});
    for (HostId h = 0; h < node_count_; ++h) {
        for (const auto& off : offsets) {
            int x = coords_[h][0] + off[0];
            int y = coords_[h][1] + off[1];
            if (kind_ == TopologyKind::torus) {
                x = ((x % side_) + side_) % side_;
                y = ((y % side_) + side_) % side_;
            } else if (x < 0 || x >= side_ || y < 0 || y >= side_) {
                continue;
            }
            HostId nb = static_cast<HostId>(x * side_ + y);
            if (nb != h) knight_[h].push_back(nb);
        }
        std::sort(knight_[h].begin(), knight_[h].end());
        knight_[h].erase(std::unique(knight_[h].begin(), knight_[h].end()), knight_[h].end());

        extended_[h] = adjacent_[h];
        extended_[h].insert(extended_[h].end(), knight_[h].begin(), knight_[h].end());
        std::sort(extended_[h].begin(), extended_[h].end());
        extended_[h].erase(std::unique(extended_[h].begin(), extended_[h].end()),
                           extended_[h].end());
    }
}

Topology Topology::general(int node_count, const std::vector<std::pair<int, int>>& edges) {
    if (node_count < 1) throw std::invalid_argument("topology: node count must be >= 1");
    Topology t;
    t.kind_ = TopologyKind::general;
    t.dims_ = 0;
    t.side_ = 0;
    t.node_count_ = node_count;
    t.adjacent_.assign(node_count, {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= node_count || b < 0 || b >= node_count)
            throw std::invalid_argument("topology: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("topology: self-loop edge");
        t.adjacent_[a].push_back(b);
        t.adjacent_[b].push_back(a);
    }
    for (auto& nbs : t.adjacent_) {
        std::sort(nbs.begin(), nbs.end());
        nbs.erase(std::unique(nbs.begin(), nbs.end()), nbs.end());
    }

    // All-pairs BFS; doubles as the connectivity check.
    const std::uint16_t unreached = UINT16_MAX;
    t.dist_table_.assign(static_cast<std::size_t>(node_count) * node_count, unreached);
    std::deque<HostId> queue;
    for (HostId src = 0; src < node_count; ++src) {
        auto* row = &t.dist_table_[static_cast<std::size_t>(src) * node_count];
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while (!queue.empty()) {
            HostId cur = queue.front();
            queue.pop_front();
            for (HostId nb : t.adjacent_[cur]) {
                if (row[nb] == unreached) {
                    row[nb] = static_cast<std::uint16_t>(row[cur] + 1);
                    queue.push_back(nb);
                }
            }
        }
        for (HostId v = 0; v < node_count; ++v)
            if (row[v] == unreached)
                throw std::invalid_argument("topology: general graph is disconnected");
    }
    return t;
}

HostId Topology::encode(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != dims_)
        throw std::invalid_argument("topology: coordinate arity mismatch");
    HostId h = 0;
    for (int a = 0; a < dims_; ++a) {
        if (coords[a] < 0 || coords[a] >= side_)
            throw std::invalid_argument("topology: coordinate out of range");
        h = h * side_ + coords[a];
    }
    return h;
}

int Topology::distance(HostId a, HostId b) const {
    switch (kind_) {
        case TopologyKind::general:
            return dist_table_[static_cast<std::size_t>(a) * node_count_ + b];
        case TopologyKind::grid: {
            int d = 0;
            for (int ax = 0; ax < dims_; ++ax) d += std::abs(coords_[a][ax] - coords_[b][ax]);
            return d;
        }
        case TopologyKind::torus: {
            int d = 0;
            for (int ax = 0; ax < dims_; ++ax) {
                int delta = std::abs(coords_[a][ax] - coords_[b][ax]);
                d += std::min(delta, side_ - delta);
            }
            return d;
        }
    }
    return 0;
}

const std::vector<HostId>& Topology::knight_neighbors(HostId h) const {
    if (!supports_knight_moves())
        throw std::invalid_argument("knight moves require a 2-dimensional grid or torus");
    return knight_[h];
}

const std::vector<HostId>& Topology::extended_neighbors(HostId h) const {
    if (!supports_knight_moves())
        throw std::invalid_argument("knight moves require a 2-dimensional grid or torus");
    return extended_[h];
}

}  // namespace meplsim
