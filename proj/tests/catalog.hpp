#pragma once

// Shared fixtures: the named graph catalogs the unit and acceptance suites
// sweep, plus the frozen canonical J_{4,6} witness.

#include <string>
#include <utility>
#include <vector>

#include "rainbowj/coloring.hpp"
#include "rainbowj/generators.hpp"
#include "rainbowj/graph.hpp"

namespace testcat {

struct NamedGraph {
    std::string name;
    rainbowj::Graph graph;
};

// P_3..P_8, C_3..C_10, W_4..W_8 (rim 3..7), K_2..K_5, co-C_6, co-C_9.
inline std::vector<NamedGraph> survey_catalog() {
    using namespace rainbowj;
    std::vector<NamedGraph> cat;
    for (int i = 3; i <= 8; ++i) cat.push_back({"P_" + std::to_string(i), path(i)});
    for (int i = 3; i <= 10; ++i) cat.push_back({"C_" + std::to_string(i), cycle(i)});
    for (int c = 3; c <= 7; ++c)
        cat.push_back({"W_" + std::to_string(c + 1), wheel(c).graph});
    for (int i = 2; i <= 5; ++i) cat.push_back({"K_" + std::to_string(i), complete(i)});
    cat.push_back({"co-C_6", cycle(6).complement()});
    cat.push_back({"co-C_9", cycle(9).complement()});
    return cat;
}

// Members of the survey catalog on at most 8 vertices, plus a small
// Jahangir graph and two Mycielski graphs for coverage of those shapes.
inline std::vector<NamedGraph> small_catalog() {
    using namespace rainbowj;
    std::vector<NamedGraph> cat;
    for (const auto& entry : survey_catalog())
        if (entry.graph.num_vertices() <= 8) cat.push_back(entry);
    cat.push_back({"J_{2,3}", jahangir(2, 3).graph});
    cat.push_back({"mu(P_2)", mycielski(path(2))});
    cat.push_back({"mu(K_3)", mycielski(complete(3))});
    return cat;
}

// The canonical 3-colour witness for J_{4,6} under the standard layout
// (cycle vertices 0..23, hub 24): spokes alternate colours 1,2 and each
// gap carries one 3-block, hub takes colour 3.
inline rainbowj::Coloring expected_j46_witness() {
    return rainbowj::Coloring{
        3, {1, 2, 3, 1, 2, 1, 3, 2, 1, 2, 3, 1, 2, 1, 3, 2, 1, 2, 3, 1, 2, 1, 3, 2, 3}};
}

}  // namespace testcat
