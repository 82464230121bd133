#pragma once

#include <vector>

#include "rainbowj/graph.hpp"

namespace rainbowj {

// A Jahangir graph together with the vertex layout the closed-form rules
// refer to. Canonical numbering: the cycle C_{nm} occupies vertices
// 0..nm-1 in cycle order, the hub is the last vertex (nm). The m spokes
// are the cycle vertices adjacent to the hub, equally spaced n apart.
struct JahangirLayout {
    Graph graph;
    Vertex hub = 0;
    std::vector<Vertex> spokes;
    std::vector<Vertex> cycle_order;
};

Graph path(int n);      // n >= 1
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1

// Wheel on c+1 vertices: cycle(c) plus a hub adjacent to every cycle
// vertex. Identical, edge for edge, to jahangir(1, c).
JahangirLayout wheel(int c);

// Jahangir graph: cycle C_{nm} plus a hub joined to m cycle vertices at
// positions 0, n, 2n, ... (so consecutive spokes are at cycle distance n,
// including the wrap-around gap, which the cycle arithmetic forces).
JahangirLayout jahangir(int n, int m);  // n >= 1, m >= 3

// Standard Mycielski construction: original vertices 0..n-1 keep their
// edges, shadow vertex n+i is joined to the neighbours of i, and an apex
// 2n is joined to every shadow. 2n+1 vertices, 3|E|+n edges. Note that
// mycielski of a single vertex is disconnected.
Graph mycielski(const Graph& g);

}  // namespace rainbowj
