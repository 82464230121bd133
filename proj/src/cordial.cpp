#include "rainbowj/cordial.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "rainbowj/jcolor.hpp"

namespace rainbowj {

namespace {

void require_shape(const Graph& g, const BinaryLabeling& f) {
    if (static_cast<int>(f.labels.size()) != g.num_vertices())
        throw std::invalid_argument("labeling: size mismatch");
    for (int x : f.labels)
        if (x != 0 && x != 1) throw std::invalid_argument("labeling: values must be 0 or 1");
}

struct CordialSearcher {
    const Graph& g;
    BudgetMeter& meter;
    int n;
    std::vector<int> labels;
    int v0 = 0, v1 = 0, e0 = 0, e1 = 0;
    int undecided_edges;

    CordialSearcher(const Graph& g_, BudgetMeter& meter_)
        : g(g_), meter(meter_), n(g_.num_vertices()),
          labels(static_cast<std::size_t>(g_.num_vertices()), -1),
          undecided_edges(g_.num_edges()) {}

    bool dfs(int v) {
        if (v == n) return std::abs(v0 - v1) <= 1 && std::abs(e0 - e1) <= 1;
        // global 0/1 flip preserves cordiality, so the first vertex can be
        // pinned to 0; this also keeps the witness lexicographically least
        const int last = (v == 0) ? 0 : 1;
        for (int bit = 0; bit <= last; ++bit) {
            meter.tick();
            labels[v] = bit;
            (bit ? v1 : v0)++;
            int same = 0, diff = 0;
            for (Vertex u : g.neighbors(v)) {
                if (labels[u] < 0) continue;
                (labels[u] == bit ? same : diff)++;
            }
            e0 += same;
            e1 += diff;
            undecided_edges -= same + diff;
            const bool balanceable = std::abs(v0 - v1) <= (n - v - 1) + 1 &&
                                     std::abs(e0 - e1) <= undecided_edges + 1;
            if (balanceable && dfs(v + 1)) return true;
            undecided_edges += same + diff;
            e0 -= same;
            e1 -= diff;
            (bit ? v1 : v0)--;
            labels[v] = -1;
        }
        return false;
    }
};

}  // namespace

LabelingStats labeling_stats(const Graph& g, const BinaryLabeling& f) {
    require_shape(g, f);
    LabelingStats stats;
    for (int x : f.labels) (x ? stats.v1 : stats.v0)++;
    for (auto [u, v] : g.edges()) (f.labels[u] == f.labels[v] ? stats.e0 : stats.e1)++;
    return stats;
}

bool is_cordial_labeling(const Graph& g, const BinaryLabeling& f) {
    const auto s = labeling_stats(g, f);
    return std::abs(s.v0 - s.v1) <= 1 && std::abs(s.e0 - s.e1) <= 1;
}

std::optional<BinaryLabeling> find_cordial_labeling(const Graph& g, const SearchBudget& budget) {
    BudgetMeter meter(budget, "cordial search");
    CordialSearcher search(g, meter);
    if (search.dfs(0)) return BinaryLabeling{std::move(search.labels)};
    return std::nullopt;
}

std::optional<CordialFamily> cordial_family_member(int n, int m) {
    if (n < 1 || m < 3)
        throw std::invalid_argument("cordial_family_member: need n >= 1, m >= 3");
    if (n % 2 == 1 && m % 4 == 0) return CordialFamily::A;
    if (n % 4 == 3 && m % 4 == 2 && m >= 6) return CordialFamily::B;
    return std::nullopt;
}

bool cordial_and_j_colorable(int n, int m) {
    return cordial_family_member(n, m).has_value() && decide_jahangir(n, m).admits;
}

}  // namespace rainbowj
