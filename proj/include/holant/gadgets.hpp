#pragma once

#include "holant/grid.hpp"

#include <utility>
#include <vector>

namespace holant {

/// Straight-line drawing turned into a grid: rotations come from angle order around each vertex.
struct Drawing {
    std::vector<Label> labels;
    std::vector<std::pair<double, double>> pos;
    std::vector<int> label_of;                 // per vertex
    std::vector<std::pair<int, int>> edges;    // vertex pairs
    /// Dangling edges as (vertex, point the edge points toward), listed in the gate's input order.
    std::vector<std::pair<int, std::pair<double, double>>> dangling;

    int add_vertex(int label, double x, double y);
    PlanarGrid build() const;
};

/// Three copies of an arity-3 signature on a triangle, one dangling edge each.
PlanarGrid triangle_gadget(const Sig& f);
/// Planar K4 with one dangling edge per vertex; f has arity 4.
PlanarGrid tetrahedron_gadget(const Sig& f);
/// Path: `end` (binary) - =2 - circle - =2 - circle ... with k-1 arity-4 circles; arity 2k.
PlanarGrid chain_gadget(const Sig& circle, const Sig& end, int k);
/// `count` arity-4 circles in a row, neighbours joined by two parallel paths through [1,0,1].
PlanarGrid double_edge_chain_gadget(const Sig& circle, int count);
/// Closed antiprism on 2n vertices, all labelled f (arity 4).
PlanarGrid antiprism_grid(const Sig& f, int n);

}  // namespace holant
