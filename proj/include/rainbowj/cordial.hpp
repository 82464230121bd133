#pragma once

#include <optional>

#include "rainbowj/budget.hpp"
#include "rainbowj/graph.hpp"

namespace rainbowj {

// 0/1 vertex labeling; an edge {u,v} gets the induced label |f(u)-f(v)|.
struct BinaryLabeling {
    std::vector<int> labels;

    friend bool operator==(const BinaryLabeling& a, const BinaryLabeling& b) = default;
};

struct LabelingStats {
    int v0 = 0;
    int v1 = 0;
    int e0 = 0;
    int e1 = 0;
};

LabelingStats labeling_stats(const Graph& g, const BinaryLabeling& f);

// Cordial: vertex-label counts and induced edge-label counts each differ
// by at most one.
bool is_cordial_labeling(const Graph& g, const BinaryLabeling& f);

// Complete search for a cordial labeling; nullopt proves none exists.
// Returns the lexicographically smallest labeling. Prunes branches whose
// remaining vertices/edges can no longer restore balance.
std::optional<BinaryLabeling> find_cordial_labeling(const Graph& g,
                                                    const SearchBudget& budget = SearchBudget{});

// The two cordial Jahangir families with closed-form membership:
// A = {n odd, m divisible by 4}, B = {n = 3 mod 4, m = 2 mod 4, m >= 6}.
enum class CordialFamily { A, B };

std::optional<CordialFamily> cordial_family_member(int n, int m);

// Member of a cordial family AND J-colourable per decide_jahangir.
bool cordial_and_j_colorable(int n, int m);

}  // namespace rainbowj
