#include "rainbowj/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace rainbowj {

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

JahangirLayout jahangir(int n, int m) {
    if (n < 1) throw std::invalid_argument("jahangir: need n >= 1");
    if (m < 3) throw std::invalid_argument("jahangir: need m >= 3");
    const int len = n * m;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(len + m));
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);

    JahangirLayout layout;
    layout.hub = len;
    layout.cycle_order.resize(static_cast<std::size_t>(len));
    std::iota(layout.cycle_order.begin(), layout.cycle_order.end(), 0);
    for (int j = 0; j < m; ++j) {
        layout.spokes.push_back(j * n);
        edges.emplace_back(layout.hub, j * n);
    }
    layout.graph = Graph(len + 1, std::move(edges));
    return layout;
}

JahangirLayout wheel(int c) {
    if (c < 3) throw std::invalid_argument("wheel: need cycle length >= 3");
    return jahangir(1, c);
}

Graph mycielski(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("mycielski: empty graph");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * g.num_edges() + n));
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(n + u, v);  // shadow of u sees neighbours of u
        edges.emplace_back(u, n + v);
    }
    const Vertex apex = 2 * n;
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, apex);
    return Graph(2 * n + 1, std::move(edges));
}

}  // namespace rainbowj
