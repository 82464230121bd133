#include "rainbowj/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rainbowj {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.resize(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::require_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    require_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
    require_vertex(v);
    std::vector<Vertex> result = adj_[v];
    result.insert(std::upper_bound(result.begin(), result.end(), v), v);
    return result;
}

int Graph::degree(Vertex v) const {
    require_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = degree(0);
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::invalid_argument("max_degree: empty graph");
    int best = degree(0);
    for (Vertex v = 1; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::is_connected() const {
    if (n_ == 0) throw std::invalid_argument("is_connected: empty graph");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v)) comp.emplace_back(u, v);
    return Graph(n_, std::move(comp));
}

}  // namespace rainbowj
