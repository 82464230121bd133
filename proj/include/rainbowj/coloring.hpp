#pragma once

#include <utility>
#include <vector>

#include "rainbowj/budget.hpp"
#include "rainbowj/graph.hpp"

namespace rainbowj {

// A vertex colouring with colour indices 1..k, one entry per vertex.
// Colourings produced by this toolkit use every colour in 1..k at least
// once; colourings read from files are validated for the value range only.
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    friend bool operator==(const Coloring& a, const Coloring& b) = default;
};

struct RainbowReport {
    bool proper = false;
    int colors_used = 0;                  // distinct colours appearing
    std::vector<Vertex> rainbow_vertices; // v with all k colours in N[v], ascending
    bool all_rainbow = false;
};

// theta(c_i): how many vertices carry colour i (1-based).
int class_size(const Coloring& col, int color);

int colors_used_count(const Coloring& col);

bool is_proper(const Graph& g, const Coloring& col);

// True iff the closed neighbourhood N[v] contains every colour 1..k.
bool yields_rainbow(const Graph& g, const Coloring& col, Vertex v);

RainbowReport rainbow_report(const Graph& g, const Coloring& col);

// Exact chromatic number by complete backtracking (k = 1, 2, ... until a
// proper colouring exists). Vertices are tried in descending-degree order;
// exactness is the contract, the ordering is a performance choice.
int chromatic_number(const Graph& g, const SearchBudget& budget = SearchBudget{});

// All proper colourings with exactly chi(G) colours whose class-size
// vector (theta(c_1), ..., theta(c_chi)) is lexicographically maximal
// among all proper chi-colourings. Returned in ascending lexicographic
// order of the assignment vector. Desk-scale exhaustive enumeration;
// throws budget_exceeded_error when the instance is out of budget.
std::vector<Coloring> chi_minus_colorings(const Graph& g,
                                          const SearchBudget& budget = SearchBudget{});

// Minimum and maximum number of rainbow vertices over all chi^- colourings.
// Reported as a pair because distinct chi^- colourings may disagree.
std::pair<int, int> r_chi(const Graph& g, const SearchBudget& budget = SearchBudget{});

}  // namespace rainbowj
