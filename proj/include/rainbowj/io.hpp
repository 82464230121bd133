#pragma once

#include <string>

#include "json.hpp"
#include "rainbowj/coloring.hpp"
#include "rainbowj/cordial.hpp"
#include "rainbowj/graph.hpp"

namespace rainbowj {

// Graph JSON: {"num_vertices": N, "edges": [[u,v], ...]}. Writers emit
// u < v in ascending order; readers accept any order or orientation.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Colouring JSON: {"k": K, "colors": [c_0, ..., c_{n-1}]} (1-based values).
nlohmann::json to_json(const Coloring& col);
Coloring coloring_from_json(const nlohmann::json& j);

// Labeling JSON: {"labels": [0, 1, ...]}.
nlohmann::json to_json(const BinaryLabeling& f);
BinaryLabeling labeling_from_json(const nlohmann::json& j);

// A graph + colouring + claim bundle that `verify` checks end to end.
// claim is "J" or "Jstar"; k duplicates coloring.k at the top level and
// the two must agree on read.
struct Certificate {
    Graph graph;
    Coloring coloring;
    std::string claim = "J";
};

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// DOT export. With a colouring, nodes are filled from a fixed 6-colour
// palette (reused cyclically beyond 6) and carry the colour index in the
// label so the picture stays readable past the palette size.
std::string to_dot(const Graph& g, const Coloring* coloring = nullptr);

}  // namespace rainbowj
