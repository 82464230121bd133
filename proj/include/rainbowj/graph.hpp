#pragma once

#include <utility>
#include <vector>

namespace rainbowj {

using Vertex = int;

// Unordered edge; normalized to first < second when stored in a Graph.
using Edge = std::pair<Vertex, Vertex>;

// Immutable undirected simple graph on vertices 0..n-1. Self-loops are
// rejected and duplicate edges collapse at construction. All queries are
// const, so Graph values can be shared across threads freely.
//
// Disconnected graphs are representable on purpose (complements of
// connected graphs need them); operations that require connectivity say so.
class Graph {
public:
    Graph() = default;
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Canonical edge list: every pair (u,v) has u < v, sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    // N[v]: the vertex together with its neighbours, sorted ascending.
    std::vector<Vertex> closed_neighborhood(Vertex v) const;

    int degree(Vertex v) const;
    int min_degree() const;  // rejects the empty graph
    int max_degree() const;  // rejects the empty graph

    bool is_connected() const;  // rejects the empty graph
    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void require_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

}  // namespace rainbowj
