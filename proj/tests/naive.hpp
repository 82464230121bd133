#pragma once

// Brute-force reference implementations used as independent oracles in
// tests. Everything here walks raw assignment spaces (k^n colourings,
// 2^n labelings) with no pruning and no code shared with the library's
// search paths.

#include <optional>
#include <utility>
#include <vector>

#include "rainbowj/graph.hpp"

namespace naive {

using rainbowj::Graph;

inline bool proper(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

inline bool uses_all(int k, const std::vector<int>& colors) {
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    for (int c : colors) seen[c] = 1;
    for (int c = 1; c <= k; ++c)
        if (!seen[c]) return false;
    return true;
}

inline bool rainbow_at(const Graph& g, int k, const std::vector<int>& colors, int v) {
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    seen[colors[v]] = 1;
    for (int u : g.neighbors(v)) seen[colors[u]] = 1;
    for (int c = 1; c <= k; ++c)
        if (!seen[c]) return false;
    return true;
}

inline bool is_j(const Graph& g, int k, const std::vector<int>& colors, bool internal_only) {
    if (!proper(g, colors) || !uses_all(k, colors)) return false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (internal_only && g.degree(v) < 2) continue;
        if (!rainbow_at(g, k, colors, v)) return false;
    }
    return true;
}

// Odometer over every assignment in {1..k}^n.
template <typename F>
void for_each_assignment(int n, int k, F&& f) {
    std::vector<int> colors(static_cast<std::size_t>(n), 1);
    while (true) {
        f(static_cast<const std::vector<int>&>(colors));
        int i = 0;
        while (i < n && colors[i] == k) colors[i++] = 1;
        if (i == n) break;
        ++colors[i];
    }
}

inline std::optional<std::vector<int>> exists_j(const Graph& g, int k, bool internal_only) {
    std::optional<std::vector<int>> witness;
    for_each_assignment(g.num_vertices(), k, [&](const std::vector<int>& colors) {
        if (!witness && is_j(g, k, colors, internal_only)) witness = colors;
    });
    return witness;
}

inline std::optional<int> max_j(const Graph& g, bool internal_only) {
    // a vertex cannot see k colours in a closed neighbourhood smaller
    // than k, so k is capped by deg+1 at every constrained vertex
    int cap = g.num_vertices();
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (internal_only && g.degree(v) < 2) continue;
        cap = std::min(cap, g.degree(v) + 1);
    }
    std::optional<int> best;
    for (int k = 1; k <= cap; ++k)
        if (exists_j(g, k, internal_only)) best = k;
    return best;
}

inline int chromatic(const Graph& g) {
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_assignment(g.num_vertices(), k, [&](const std::vector<int>& colors) {
            found = found || proper(g, colors);
        });
        if (found) return k;
    }
}

// All proper chi-colourings whose class-size vector is lexicographically
// maximal, in lexicographic assignment order.
inline std::vector<std::vector<int>> chi_minus(const Graph& g) {
    const int chi = chromatic(g);
    std::vector<int> best_theta;
    std::vector<std::vector<int>> best;
    for_each_assignment(g.num_vertices(), chi, [&](const std::vector<int>& colors) {
        if (!proper(g, colors)) return;
        std::vector<int> theta(static_cast<std::size_t>(chi), 0);
        for (int c : colors) ++theta[c - 1];
        if (theta > best_theta) {
            best_theta = theta;
            best.clear();
        }
        if (theta == best_theta) best.push_back(colors);
    });
    return best;
}

inline int rainbow_count(const Graph& g, int k, const std::vector<int>& colors) {
    int count = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (rainbow_at(g, k, colors, v)) ++count;
    return count;
}

inline std::pair<int, int> r_chi(const Graph& g) {
    const int chi = chromatic(g);
    int lo = g.num_vertices(), hi = 0;
    for (const auto& colors : chi_minus(g)) {
        const int c = rainbow_count(g, chi, colors);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return {lo, hi};
}

inline std::optional<std::vector<int>> find_cordial(const Graph& g) {
    const int n = g.num_vertices();
    std::optional<std::vector<int>> found;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (long long mask = 0; mask < (1LL << n) && !found; ++mask) {
        for (int v = 0; v < n; ++v) labels[v] = (mask >> v) & 1;
        int v0 = 0, v1 = 0, e0 = 0, e1 = 0;
        for (int x : labels) (x ? v1 : v0)++;
        for (auto [u, v] : g.edges()) (labels[u] == labels[v] ? e0 : e1)++;
        if (std::abs(v0 - v1) <= 1 && std::abs(e0 - e1) <= 1) found = labels;
    }
    return found;
}

}  // namespace naive
