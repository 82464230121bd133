#pragma once

#include <optional>
#include <string>

#include "rainbowj/budget.hpp"
#include "rainbowj/coloring.hpp"
#include "rainbowj/graph.hpp"

namespace rainbowj {

// Outcome of a J-colourability decision. When the graph admits, j_number
// holds the maximum number of colours and witness a colouring achieving
// it; rule records which closed-form rule or search produced the verdict.
struct JDecision {
    bool admits = false;
    std::optional<int> j_number;
    std::optional<Coloring> witness;
    std::string rule;
};

// A J-colouring is a proper colouring that uses all of its k colours and
// makes every vertex's closed neighbourhood rainbow. The J* variant only
// requires the rainbow condition at internal vertices (degree >= 2).
bool is_j_coloring(const Graph& g, const Coloring& col);
bool is_jstar_coloring(const Graph& g, const Coloring& col);

// Complete search for a colouring with exactly k colours satisfying the
// J (or, with internal_only, the J*) condition. Returns a witness or
// nullopt when none exists; throws budget_exceeded_error when the search
// runs out of budget, which is a distinct outcome from "none exists".
std::optional<Coloring> exists_k_j_coloring(const Graph& g, int k, bool internal_only = false,
                                            const SearchBudget& budget = SearchBudget{});

// Exact J-number (resp. J*-number) by scanning k downward from the
// structural upper bound min over constrained vertices of deg+1; the
// first k that succeeds is the maximum. No k below chi(G) is attempted.
JDecision j_number(const Graph& g, const SearchBudget& budget = SearchBudget{});
JDecision jstar_number(const Graph& g, const SearchBudget& budget = SearchBudget{});

// Membership in {1, 4, 7, ...}, the spoke gaps for which Jahangir graphs
// can admit a J-colouring.
bool in_j_set(long long n);

// Closed-form deciders for the supported families. Witnesses come from
// the matching construct_* routine.
JDecision decide_cycle(int c);              // c >= 3
JDecision decide_wheel(int c);              // rim length c >= 3 (wheel on c+1 vertices)
JDecision decide_jahangir(int n, int m);    // n >= 1, m >= 3; n = 1 follows the wheel rule

// Witness constructions. Each output passes is_j_coloring; preconditions
// are the matching decide_* verdicts. construct_jahangir_j builds the
// 3-colour pattern (m even, n in the J-set; n = 1 delegates to the wheel
// construction); construct_jahangir_bipartite_j builds the 2-colour
// bipartition witness that exists whenever n is even.
Coloring construct_cycle_j(int c);
Coloring construct_wheel_j(int c);
Coloring construct_jahangir_j(int n, int m);
Coloring construct_jahangir_bipartite_j(int n, int m);

}  // namespace rainbowj
