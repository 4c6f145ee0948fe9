#pragma once

#include "holant/grid.hpp"

#include <vector>

namespace holant::detail {

/// Edge index seen at each slot of each vertex.
inline std::vector<std::vector<int>> slot_edges(const PlanarGrid& g) {
    Topology t = g.topology();
    if (!g.dangling.empty()) throw StructureError("evaluation needs a grid without dangling edges");
    std::vector<int> edge_of(t.max_half + 1, -1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        edge_of[g.edges[e].first] = static_cast<int>(e);
        edge_of[g.edges[e].second] = static_cast<int>(e);
    }
    std::vector<std::vector<int>> out(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int h : g.vertices[v].rotation) out[v].push_back(edge_of[h]);
    return out;
}

}  // namespace holant::detail
