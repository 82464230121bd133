#include "rainbowj/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbowj {

namespace {

void require_shape(const Graph& g, const Coloring& col) {
    if (static_cast<int>(col.colors.size()) != g.num_vertices())
        throw std::invalid_argument("coloring: assignment length " +
                                    std::to_string(col.colors.size()) + " != vertex count " +
                                    std::to_string(g.num_vertices()));
    for (int c : col.colors)
        if (c < 1 || c > col.k)
            throw std::invalid_argument("coloring: colour " + std::to_string(c) +
                                        " outside 1.." + std::to_string(col.k));
}

std::vector<int> degree_order(const Graph& g, bool ascending) {
    std::vector<int> order(static_cast<std::size_t>(g.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ascending ? g.degree(a) < g.degree(b) : g.degree(a) > g.degree(b);
    });
    return order;
}

// Proper-colourability test with at most k colours. Colour classes are
// interchangeable, so a vertex may only open colour max_used+1.
struct ProperSearcher {
    const Graph& g;
    int k;
    const std::vector<int>& order;
    BudgetMeter& meter;
    std::vector<int> color;

    ProperSearcher(const Graph& g_, int k_, const std::vector<int>& order_, BudgetMeter& meter_)
        : g(g_), k(k_), order(order_), meter(meter_), color(g_.num_vertices(), 0) {}

    bool dfs(std::size_t idx, int max_used) {
        if (idx == order.size()) return true;
        const int v = order[idx];
        const int cmax = std::min(k, max_used + 1);
        for (int c = 1; c <= cmax; ++c) {
            meter.tick();
            bool clash = false;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            if (dfs(idx + 1, std::max(max_used, c))) return true;
            color[v] = 0;
        }
        return false;
    }
};

// Enumerates every proper assignment from {1..k}^V in vertex-index order,
// which yields callbacks in lexicographic order of the assignment vector.
template <typename Callback>
void for_each_proper_coloring(const Graph& g, int k, BudgetMeter& meter, Callback&& emit) {
    const int n = g.num_vertices();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            emit(color);
            return;
        }
        for (int c = 1; c <= k; ++c) {
            meter.tick();
            bool clash = false;
            for (int u : g.neighbors(v)) {
                if (u < v && color[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color[v] = c;
            self(self, v + 1);
        }
        color[v] = 0;
    };
    dfs(dfs, 0);
}

std::vector<int> theta_vector(const std::vector<int>& colors, int k) {
    std::vector<int> theta(static_cast<std::size_t>(k), 0);
    for (int c : colors) ++theta[c - 1];
    return theta;
}

}  // namespace

int class_size(const Coloring& col, int color) {
    if (color < 1 || color > col.k)
        throw std::out_of_range("class_size: colour index " + std::to_string(color) +
                                " outside 1.." + std::to_string(col.k));
    return static_cast<int>(std::count(col.colors.begin(), col.colors.end(), color));
}

int colors_used_count(const Coloring& col) {
    std::vector<char> seen(static_cast<std::size_t>(col.k) + 1, 0);
    int used = 0;
    for (int c : col.colors)
        if (!seen[c]) {
            seen[c] = 1;
            ++used;
        }
    return used;
}

bool is_proper(const Graph& g, const Coloring& col) {
    require_shape(g, col);
    for (auto [u, v] : g.edges())
        if (col.colors[u] == col.colors[v]) return false;
    return true;
}

bool yields_rainbow(const Graph& g, const Coloring& col, Vertex v) {
    require_shape(g, col);
    if (v < 0 || v >= g.num_vertices())
        throw std::out_of_range("yields_rainbow: vertex out of range");
    std::vector<char> seen(static_cast<std::size_t>(col.k) + 1, 0);
    seen[col.colors[v]] = 1;
    int distinct = 1;
    for (int u : g.neighbors(v))
        if (!seen[col.colors[u]]) {
            seen[col.colors[u]] = 1;
            ++distinct;
        }
    return distinct == col.k;
}

RainbowReport rainbow_report(const Graph& g, const Coloring& col) {
    require_shape(g, col);
    RainbowReport report;
    report.proper = is_proper(g, col);
    report.colors_used = colors_used_count(col);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (yields_rainbow(g, col, v)) report.rainbow_vertices.push_back(v);
    report.all_rainbow =
        static_cast<int>(report.rainbow_vertices.size()) == g.num_vertices();
    return report;
}

int chromatic_number(const Graph& g, const SearchBudget& budget) {
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("chromatic_number: empty graph");
    const auto order = degree_order(g, /*ascending=*/false);
    BudgetMeter meter(budget, "chromatic_number");
    for (int k = 1; k < n; ++k) {
        ProperSearcher search(g, k, order, meter);
        if (search.dfs(0, 0)) return k;
    }
    return n;  // n colours always suffice
}

std::vector<Coloring> chi_minus_colorings(const Graph& g, const SearchBudget& budget) {
    const int chi = chromatic_number(g, budget);
    BudgetMeter meter(budget, "chi_minus_colorings");
    // Any proper assignment from {1..chi}^V uses all chi colours (fewer
    // would contradict minimality), so plain proper enumeration suffices.
    std::vector<int> best_theta;
    std::vector<Coloring> best;
    for_each_proper_coloring(g, chi, meter, [&](const std::vector<int>& colors) {
        auto theta = theta_vector(colors, chi);
        if (theta > best_theta) {
            best_theta = std::move(theta);
            best.clear();
            best.push_back(Coloring{chi, colors});
        } else if (theta == best_theta) {
            best.push_back(Coloring{chi, colors});
        }
    });
    return best;
}

std::pair<int, int> r_chi(const Graph& g, const SearchBudget& budget) {
    const auto colorings = chi_minus_colorings(g, budget);
    int lo = g.num_vertices();
    int hi = 0;
    for (const auto& col : colorings) {
        const auto report = rainbow_report(g, col);
        const int count = static_cast<int>(report.rainbow_vertices.size());
        lo = std::min(lo, count);
        hi = std::max(hi, count);
    }
    return {lo, hi};
}

}  // namespace rainbowj
