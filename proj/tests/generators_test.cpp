#include <queue>
#include <stdexcept>

#include "doctest.h"
#include "rainbowj/generators.hpp"

using namespace rainbowj;

namespace {

// BFS distance inside a graph, for the spoke-spacing invariant.
int bfs_distance(const Graph& g, Vertex from, Vertex to) {
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::queue<Vertex> queue;
    dist[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        if (v == to) return dist[v];
        for (Vertex u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
    }
    return -1;
}

}  // namespace

TEST_CASE("path") {
    CHECK(path(3).num_edges() == 2);
    CHECK(path(1) == complete(1));
    const auto p5 = path(5);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(2) == 2);
    CHECK(p5.degree(4) == 1);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("cycle") {
    CHECK(cycle(3) == complete(3));
    const auto c6 = cycle(6);
    CHECK(c6.num_edges() == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("wheel") {
    CHECK(wheel(3).graph == complete(4));
    const auto w5 = wheel(4);
    CHECK(w5.graph.num_vertices() == 5);
    CHECK(w5.graph.num_edges() == 8);
    CHECK(wheel(6).graph.degree(wheel(6).hub) == 6);
    CHECK_THROWS_AS(wheel(2), std::invalid_argument);
}

TEST_CASE("jahangir counts and special cases") {
    const auto j46 = jahangir(4, 6);
    CHECK(j46.graph.num_vertices() == 25);
    CHECK(j46.graph.num_edges() == 30);
    CHECK(j46.graph.degree(j46.hub) == 6);

    CHECK(jahangir(1, 4).graph == wheel(4).graph);

    const auto j23 = jahangir(2, 3);
    CHECK(j23.graph.num_vertices() == 7);
    CHECK(j23.graph.num_edges() == 9);

    CHECK_THROWS_AS(jahangir(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(jahangir(2, 2), std::invalid_argument);
}

TEST_CASE("jahangir layout invariants") {
    for (auto [n, m] : {std::pair{2, 3}, {3, 4}, {4, 6}, {1, 5}, {5, 4}}) {
        const auto layout = jahangir(n, m);
        const auto& g = layout.graph;
        CHECK(static_cast<int>(layout.spokes.size()) == m);
        CHECK(static_cast<int>(layout.cycle_order.size()) == n * m);
        CHECK(g.num_vertices() == n * m + 1);
        CHECK(g.num_edges() == n * m + m);
        CHECK(g.degree(layout.hub) == m);
        CHECK(g.is_connected());

        std::vector<char> is_spoke(static_cast<std::size_t>(g.num_vertices()), 0);
        for (Vertex s : layout.spokes) {
            is_spoke[s] = 1;
            CHECK(g.adjacent(layout.hub, s));
            if (n >= 2) CHECK(g.degree(s) == 3);
        }
        for (Vertex v : layout.cycle_order)
            if (!is_spoke[v]) CHECK(g.degree(v) == 2);

        // consecutive spokes sit n apart on the cycle, wrap-around included
        for (std::size_t i = 0; i < layout.spokes.size(); ++i) {
            const Vertex a = layout.spokes[i];
            const Vertex b = layout.spokes[(i + 1) % layout.spokes.size()];
            const auto cycle_only = Graph(n * m, [&] {
                std::vector<Edge> edges;
                for (int j = 0; j < n * m; ++j) edges.emplace_back(j, (j + 1) % (n * m));
                return edges;
            }());
            CHECK(bfs_distance(cycle_only, a, b) == n);
        }
    }
}

TEST_CASE("mycielski") {
    // mycielski of a single edge is a 5-cycle: 5 vertices, 5 edges, all
    // degree 2, connected
    const auto m2 = mycielski(path(2));
    CHECK(m2.num_vertices() == 5);
    CHECK(m2.num_edges() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(m2.degree(v) == 2);
    CHECK(m2.is_connected());

    const auto m4 = mycielski(cycle(4));
    CHECK(m4.num_vertices() == 9);
    CHECK(m4.num_edges() == 16);

    // single vertex: shadow has no neighbours, so the original vertex is
    // stranded (3 vertices, 1 edge, disconnected)
    const auto m1 = mycielski(complete(1));
    CHECK(m1.num_vertices() == 3);
    CHECK(m1.num_edges() == 1);
    CHECK_FALSE(m1.is_connected());

    CHECK_THROWS_AS(mycielski(Graph(0, {})), std::invalid_argument);

    for (const auto& g : {path(4), cycle(5), complete(4), jahangir(2, 3).graph}) {
        const auto mg = mycielski(g);
        CHECK(mg.num_vertices() == 2 * g.num_vertices() + 1);
        CHECK(mg.num_edges() == 3 * g.num_edges() + g.num_vertices());
    }
}

TEST_CASE("complete") {
    CHECK(complete(4).num_edges() == 6);
    CHECK(complete(1).num_vertices() == 1);
    CHECK(complete(3) == cycle(3));
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
}
