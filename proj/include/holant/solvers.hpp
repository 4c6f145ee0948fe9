#pragma once

#include "holant/algebra.hpp"
#include "holant/classify.hpp"
#include "holant/grid.hpp"
#include "holant/sigcalc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holant {

class ClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RepresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GcdError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- FKT

struct WeightedPlanarGraph {
    struct Edge {
        int u = 0, v = 0;
        Alg w = 1;
    };
    int num_vertices = 0;
    std::vector<Edge> edges;
    /// Per vertex, darts counterclockwise: dart 2e sits at edges[e].u, dart 2e+1 at edges[e].v.
    std::vector<std::vector<int>> rotation;

    int add_edge(int u, int v, Alg w = 1);
    /// Rotation from straight-line coordinates (angle sort around each vertex).
    void rotation_from_coordinates(const std::vector<std::pair<double, double>>& xy);
};

/// Weighted perfect-matching sum.
Alg fkt_count_pm(const WeightedPlanarGraph& g);

/// Exhaustive weighted perfect-matching sum; exponential, for checks.
Alg pm_bruteforce(const WeightedPlanarGraph& g);

// ---------------------------------------------------------------- grid solvers

Alg product_eval(const PlanarGrid& g);
Alg affine_eval(const PlanarGrid& g);
Alg vanishing_eval(const PlanarGrid& g);

/// Symmetric 𝒜 signature as lambda * chi * i^(a*|x| + c*C(|x|,2)) (support kinds below).
struct AffineForm {
    enum class Support { All, Even, Odd, Equal, AllZero, AllOne } support = Support::All;
    Alg lambda = 1;
    int a = 0;  // mod 4; for Equal, the exponent on the common value
    int c = 0;  // 0 or 2
};

std::optional<AffineForm> affine_form(const Sig& f);

// ---------------------------------------------------------------- ≠₂ | GenEq, EO instances

/// Bipartite planar grid: LHS all (weighted) ≠₂; RHS weighted equalities of arity a multiple of k,
/// ExactOne_d (any d >= 1, weighted), pins and zero signatures.
struct EOInstance {
    PlanarGrid grid;
    /// gcd of the equality arities; 0 when there are none.
    int k = 0;

    /// Validates the shape and computes k; throws StructureError or GcdError.
    static EOInstance from_grid(const PlanarGrid& g);
};

struct EBlock {
    std::vector<int> vertices;          // equality vertices in the block
    std::vector<int> external;          // half-edge ids on those vertices leading out of the block
    std::vector<bool> minus;            // sign per external half-edge
    Alg w_plus = 0, w_minus = 0;        // weights of the two support vectors
    bool trivial = false;               // no consistent sign marking
};

/// E-blocks of the instance before any rewriting: equality vertices joined through LHS ≠₂.
std::vector<EBlock> find_eblocks(const EOInstance& inst);

struct EOTraceEvent {
    std::string step;
    /// Residual instance; value(residual) * scalar equals the answer at every step.
    PlanarGrid residual;
    Alg scalar;
    /// For "pin" events: RHS half-edge ids of the residual with the value forced on them.
    std::vector<std::pair<int, int>> pins;
};

using EOTrace = std::function<void(const EOTraceEvent&)>;

Alg eo_geneq_eval(const EOInstance& inst, const EOTrace& trace = nullptr);

// ---------------------------------------------------------------- hypergraphs

struct PlanarHypergraph {
    struct Hyperedge {
        int id = 0;
        std::vector<int> members;
    };
    std::vector<int> vertices;
    std::vector<Hyperedge> hyperedges;
    /// Keys "v<id>" / "h<id>"; values are incidence ids counterclockwise.
    /// Incidence ids number the (hyperedge, member) pairs in listing order.
    std::map<std::string, std::vector<int>> rotation;

    int incidence_count() const;
};

/// Encoding: hyperedges as equalities, vertices as ExactOne, one LHS ≠₂ per incidence.
EOInstance hypergraph_encoding(const PlanarHypergraph& h);

struct HypergraphResult {
    SetVerdict verdict;
    std::optional<Alg> value;
    std::string method;
};

HypergraphResult hypergraph_pm(const PlanarHypergraph& h, std::size_t cap = default_cap());

/// Perfect matchings by direct enumeration over hyperedge subsets.
Alg hypergraph_pm_bruteforce(const PlanarHypergraph& h);

// ---------------------------------------------------------------- dispatcher

enum class Method { Auto, Brute, Product, Affine, Vanishing, EO, FKT };

Method parse_method(const std::string& s);
std::string method_name(Method m);

struct EvalResult {
    Alg value;
    std::string route;
    std::string note;
    std::optional<SetVerdict> verdict;
};

EvalResult evaluate_detailed(const PlanarGrid& g, Method m = Method::Auto, std::size_t cap = default_cap());
Alg evaluate(const PlanarGrid& g, Method m = Method::Auto, std::size_t cap = default_cap());

/// Grid whose every vertex is a scalar multiple of ExactOne of its arity, as a weighted graph.
std::optional<std::pair<WeightedPlanarGraph, Alg>> matching_graph(const PlanarGrid& g);

}  // namespace holant
