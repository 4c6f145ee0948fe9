#pragma once

#include "holant/classify.hpp"
#include "holant/grid.hpp"
#include "holant/sigcalc.hpp"
#include "holant/solvers.hpp"

#include <functional>
#include <random>
#include <vector>

namespace holant::ts {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p = 0.5);

/// Small element of Q(w) with integer coefficients in [-range, range].
Alg random_alg(Rng& rng, int range = 2);
Alg random_nonzero(Rng& rng, int range = 2);
/// Nonzero values biased toward roots of unity and small integers.
Alg random_special(Rng& rng);
Sig random_sig(Rng& rng, int arity, int range = 2);
Transform2x2 random_invertible(Rng& rng);
/// Rational rotations and reflections from Pythagorean triples.
Transform2x2 random_orthogonal(Rng& rng);

/// Member of a class built from its definition (transform of a canonical form).
Sig class_member(Rng& rng, TractableClass c, int arity);

/// Rotation system under construction; halves are 0..2E-1 with mate h^1.
struct PlanarMap {
    std::vector<std::vector<int>> rot;
    std::vector<int> vert;  // half -> vertex

    int add_vertex();
    /// New edge from a corner of v (inserted before slot `pos`) to a fresh vertex.
    int add_pendant(int v, int pos);
    /// Chord across a face between the corners after two of its darts.
    void add_chord(int dart_a, int dart_b);
    std::vector<std::vector<int>> faces() const;
    int edges() const { return static_cast<int>(vert.size()) / 2; }
    std::vector<int> degrees() const;
};

/// Connected planar map; loops and parallel edges allowed when requested.
PlanarMap random_planar_map(Rng& rng, int vertices, int edges, bool loops = true, bool multi = true);

/// Grid over a map; label_for(vertex, degree) picks each vertex's signature.
PlanarGrid grid_from_map(const PlanarMap& m, const std::function<Sig(int, int)>& label_for);

/// Random grid with symmetric labels from `pick(degree)`.
PlanarGrid random_grid(Rng& rng, int max_edges, const std::function<Sig(int)>& pick);

/// Each edge of a map subdivided by a left binary vertex from `binary()`; map vertices go right.
PlanarGrid random_bipartite_grid(Rng& rng, int max_edges, const std::function<Sig(int)>& pick,
                                 const std::function<Label()>& binary);

/// Random ≠₂ | {equalities of arity 5 or 10, ExactOne, pins} instance in bipartite form.
struct EOOptions {
    int min_links = 5, max_links = 9;
    bool weighted = true;
    bool pins = true;
};
EOInstance random_eo_instance(Rng& rng, const EOOptions& opt = {});

/// Random planar hypergraph with hyperedge sizes drawn from `sizes`.
PlanarHypergraph random_hypergraph(Rng& rng, const std::vector<int>& sizes, int max_incidences);

/// Value of the grid by plain enumeration of every assignment (independent of the library's enumerator).
Alg naive_holant(const PlanarGrid& g);

/// Every assignment with a nonzero product, as edge-value vectors indexed like g.edges.
std::vector<std::vector<int>> support_assignments(const PlanarGrid& g);

/// Index of the edge containing half h.
int edge_of_half(const PlanarGrid& g, int h);

/// Exact 3x3 determinant by the cofactor formula.
Alg det3_cofactor(const std::vector<std::vector<Alg>>& m);

/// Multiplicity of (x + sigma i y) in the binary form of f; arity + 1 for the zero signature.
int vd_by_factoring(const Sig& f, int sigma);
/// Least t with f in the recurrence class of order t + 1; -1 for the zero signature.
int rd_by_recurrence(const Sig& f, int sigma);

/// First of the five binary-with-equalities conditions that holds, or 0.
int binary_eq_conditions(const Alg& f0, const Alg& f1, const Alg& f2, const std::vector<int>& S);

/// Weighted perfect matchings by recursive enumeration.
Alg matchings_by_enumeration(const WeightedPlanarGraph& g);
/// Perfect matchings of a hypergraph by enumerating hyperedge subsets.
Alg hyperedge_covers_by_enumeration(const PlanarHypergraph& h);
/// Weighted graph over a loopless map; edge e joins the ends of halves 2e and 2e+1.
WeightedPlanarGraph graph_from_map(const PlanarMap& m, const std::vector<Alg>& weights);
/// Grid whose value is the weighted matching sum: ExactOne support, each weight charged at one end.
PlanarGrid matching_grid(const PlanarMap& m, const std::vector<Alg>& weights);
/// Rectangular grid graph drawn at integer points.
WeightedPlanarGraph grid_graph(int rows, int cols);

}  // namespace holant::ts
