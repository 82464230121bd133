#include "rainbowj/io.hpp"

#include <sstream>
#include <stdexcept>

namespace rainbowj {

using nlohmann::json;

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"num_vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    const int n = j.at("num_vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge entries must be [u, v] pairs");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(n, std::move(edges));
}

json to_json(const Coloring& col) {
    return json{{"k", col.k}, {"colors", col.colors}};
}

Coloring coloring_from_json(const json& j) {
    Coloring col;
    col.k = j.at("k").get<int>();
    col.colors = j.at("colors").get<std::vector<int>>();
    if (col.k < 0) throw std::invalid_argument("coloring json: negative k");
    for (int c : col.colors)
        if (c < 1 || c > col.k)
            throw std::invalid_argument("coloring json: colour value outside 1..k");
    return col;
}

json to_json(const BinaryLabeling& f) {
    return json{{"labels", f.labels}};
}

BinaryLabeling labeling_from_json(const json& j) {
    BinaryLabeling f;
    f.labels = j.at("labels").get<std::vector<int>>();
    for (int x : f.labels)
        if (x != 0 && x != 1) throw std::invalid_argument("labeling json: values must be 0 or 1");
    return f;
}

json to_json(const Certificate& cert) {
    return json{{"graph", to_json(cert.graph)},
                {"coloring", to_json(cert.coloring)},
                {"claim", cert.claim},
                {"k", cert.coloring.k}};
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    cert.graph = graph_from_json(j.at("graph"));
    cert.coloring = coloring_from_json(j.at("coloring"));
    cert.claim = j.at("claim").get<std::string>();
    if (cert.claim != "J" && cert.claim != "Jstar")
        throw std::invalid_argument("certificate json: claim must be \"J\" or \"Jstar\"");
    if (j.at("k").get<int>() != cert.coloring.k)
        throw std::invalid_argument("certificate json: top-level k disagrees with coloring.k");
    if (static_cast<int>(cert.coloring.colors.size()) != cert.graph.num_vertices())
        throw std::invalid_argument("certificate json: coloring length != vertex count");
    return cert;
}

std::string to_dot(const Graph& g, const Coloring* coloring) {
    static const char* kPalette[6] = {"#e6194b", "#3cb44b", "#ffe119",
                                      "#4363d8", "#f58231", "#46f0f0"};
    std::ostringstream out;
    out << "graph G {\n";
    if (coloring) out << "  node [style=filled];\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (coloring) {
            const int c = coloring->colors.at(static_cast<std::size_t>(v));
            out << "  " << v << " [label=\"" << v << ":c" << c << "\", fillcolor=\""
                << kPalette[(c - 1) % 6] << "\"];\n";
        } else {
            out << "  " << v << ";\n";
        }
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rainbowj
