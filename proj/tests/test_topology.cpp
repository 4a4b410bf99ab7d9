#include "doctest.h"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "meplsim/rng.hpp"
#include "meplsim/topology.hpp"

using namespace meplsim;

namespace {

// Independent BFS over the explicit neighbor lists, used to cross-check the
// closed-form grid/torus distances.
int bfs_distance(const Topology& t, HostId src, HostId dst) {
    std::vector<int> dist(t.node_count(), -1);
    std::deque<HostId> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        HostId cur = queue.front();
        queue.pop_front();
        if (cur == dst) return dist[cur];
        for (HostId nb : t.adjacent_neighbors(cur)) {
            if (dist[nb] == -1) {
                dist[nb] = dist[cur] + 1;
                queue.push_back(nb);
            }
        }
    }
    return dist[dst];
}

}  // namespace

TEST_CASE("line of 5 is a path graph") {
    Topology line = Topology::line(5);
    CHECK(line.node_count() == 5);
    int edges = 0;
    for (HostId h = 0; h < 5; ++h) edges += static_cast<int>(line.adjacent_neighbors(h).size());
    CHECK(edges / 2 == 4);
    CHECK(line.adjacent_neighbors(0) == std::vector<HostId>{1});
    CHECK(line.adjacent_neighbors(2) == std::vector<HostId>{1, 3});
}

TEST_CASE("30x30 torus is 4-regular with 900 nodes") {
    Topology torus = Topology::torus(2, 30);
    CHECK(torus.node_count() == 900);
    for (HostId h = 0; h < torus.node_count(); ++h)
        CHECK(torus.adjacent_neighbors(h).size() == 4);
}

TEST_CASE("3x3 grid corner and center degrees") {
    Topology grid = Topology::grid(2, 3);
    CHECK(grid.node_count() == 9);
    CHECK(grid.adjacent_neighbors(grid.encode({0, 0})).size() == 2);
    CHECK(grid.adjacent_neighbors(grid.encode({1, 1})).size() == 4);
}

TEST_CASE("distances: grid L1, ring wraparound, complete graph") {
    Topology grid = Topology::grid(2, 3);
    CHECK(grid.distance(grid.encode({0, 0}), grid.encode({2, 1})) == 3);

    Topology ring = Topology::ring(6);
    CHECK(ring.distance(0, 4) == 2);

    Topology k3 = Topology::general(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(k3.distance(0, 1) == 1);
    CHECK(k3.distance(1, 2) == 1);
    CHECK(k3.distance(2, 2) == 0);
}

TEST_CASE("coordinate encoding round-trips for every index") {
    for (const Topology& t : {Topology::grid(2, 4), Topology::torus(3, 3), Topology::line(7)}) {
        for (HostId h = 0; h < t.node_count(); ++h) CHECK(t.encode(t.coords(h)) == h);
    }
}

TEST_CASE("formula distance equals BFS distance on meshes up to 100 hosts") {
    const std::vector<Topology> meshes = {Topology::line(9),     Topology::ring(10),
                                          Topology::grid(2, 7),  Topology::torus(2, 8),
                                          Topology::grid(3, 4),  Topology::torus(3, 4),
                                          Topology::torus(2, 2), Topology::grid(1, 2)};
    for (const auto& t : meshes) {
        REQUIRE(t.node_count() <= 100);
        for (HostId a = 0; a < t.node_count(); ++a)
            for (HostId b = 0; b < t.node_count(); ++b)
                CHECK(t.distance(a, b) == bfs_distance(t, a, b));
    }
}

TEST_CASE("adjacent_neighbors is exactly the distance-1 set, ascending") {
    for (const Topology& t :
         {Topology::grid(2, 4), Topology::torus(2, 5), Topology::general(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})}) {
        for (HostId h = 0; h < t.node_count(); ++h) {
            std::vector<HostId> expected;
            for (HostId x = 0; x < t.node_count(); ++x)
                if (x != h && t.distance(h, x) == 1) expected.push_back(x);
            CHECK(t.adjacent_neighbors(h) == expected);
        }
    }
}

TEST_CASE("knight moves on the 5x5 grid") {
    Topology grid = Topology::grid(2, 5);
    CHECK(grid.knight_neighbors(grid.encode({2, 2})).size() == 8);

    auto corner = grid.knight_neighbors(grid.encode({0, 0}));
    std::vector<HostId> expected = {grid.encode({1, 2}), grid.encode({2, 1})};
    std::sort(expected.begin(), expected.end());
    CHECK(corner == expected);

    // Knight offsets sit at L1 distance 3, two on one axis and one on the other.
    for (HostId h = 0; h < grid.node_count(); ++h) {
        for (HostId nb : grid.knight_neighbors(h)) {
            int dx = std::abs(grid.coords(h)[0] - grid.coords(nb)[0]);
            int dy = std::abs(grid.coords(h)[1] - grid.coords(nb)[1]);
            CHECK(grid.distance(h, nb) == 3);
            CHECK(std::min(dx, dy) == 1);
            CHECK(std::max(dx, dy) == 2);
        }
    }
}

TEST_CASE("knight moves wrap and deduplicate on the 4x4 torus") {
    Topology torus = Topology::torus(2, 4);
    // Oracle: enumerate the eight offsets mod 4 and deduplicate.
    static const int offsets[8][2] = {{1, 2},  {1, -2},  {-1, 2},  {-1, -2},
                                      {2, 1},  {2, -1},  {-2, 1},  {-2, -1}};
    std::set<HostId> expected;
    for (const auto& off : offsets) {
        int x = ((0 + off[0]) % 4 + 4) % 4;
        int y = ((0 + off[1]) % 4 + 4) % 4;
        expected.insert(torus.encode({x, y}));
    }
    std::vector<HostId> expected_sorted(expected.begin(), expected.end());
    CHECK(torus.knight_neighbors(0) == expected_sorted);
    CHECK(expected_sorted.size() == 4);  // the +-2 offsets alias mod 4

    Topology torus5 = Topology::torus(2, 5);
    CHECK(torus5.knight_neighbors(0).size() == 8);
}

TEST_CASE("extended move set is the union of adjacent and knight moves") {
    Topology grid = Topology::grid(2, 4);
    for (HostId h = 0; h < grid.node_count(); ++h) {
        std::set<HostId> expected(grid.adjacent_neighbors(h).begin(),
                                  grid.adjacent_neighbors(h).end());
        expected.insert(grid.knight_neighbors(h).begin(), grid.knight_neighbors(h).end());
        std::vector<HostId> expected_sorted(expected.begin(), expected.end());
        CHECK(grid.extended_neighbors(h) == expected_sorted);
    }
}

TEST_CASE("knight moves rejected off 2-D meshes") {
    Topology line = Topology::line(5);
    CHECK_THROWS_AS(line.knight_neighbors(0), std::invalid_argument);
    Topology general = Topology::general(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(general.knight_neighbors(0), std::invalid_argument);
}

TEST_CASE("disconnected general graphs are rejected") {
    CHECK_THROWS_AS(Topology::general(4, {{0, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Topology::general(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("distance is a metric on sampled topologies") {
    Rng rng(0xfeed);
    for (const Topology& t : {Topology::torus(2, 6), Topology::grid(2, 6),
                              Topology::general(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})}) {
        for (int trial = 0; trial < 200; ++trial) {
            HostId a = static_cast<HostId>(rng.next_below(t.node_count()));
            HostId b = static_cast<HostId>(rng.next_below(t.node_count()));
            HostId c = static_cast<HostId>(rng.next_below(t.node_count()));
            CHECK(t.distance(a, b) == t.distance(b, a));
            CHECK((t.distance(a, b) == 0) == (a == b));
            CHECK(t.distance(a, c) <= t.distance(a, b) + t.distance(b, c));
        }
    }
}
