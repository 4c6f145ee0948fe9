#pragma once

#include "holant/algebra.hpp"
#include "holant/sigcalc.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace holant {

class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmbeddingError : public std::runtime_error {
public:
    EmbeddingError(const std::string& msg, int component) : std::runtime_error(msg), component_(component) {}
    int component() const { return component_; }

private:
    int component_;
};

class OrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TooLarge : public std::runtime_error {
public:
    TooLarge(const std::string& what, std::size_t size, std::size_t cap)
        : std::runtime_error(what + ": " + std::to_string(size) + " edges exceeds cap " + std::to_string(cap)),
          size_(size),
          cap_(cap) {}
    std::size_t size() const { return size_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t size_, cap_;
};

class NotBipartite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = 24;

/// Cap from HOLANT_CAP when set, else the default.
std::size_t default_cap();

/// Vertex function: symmetric, or general with input 0 as the most significant index bit.
class Label {
public:
    Label() = default;
    Label(Sig s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    Label(GeneralSignature g) : v_(std::move(g)) {}  // NOLINT(google-explicit-constructor)

    int arity() const;
    bool is_symmetric() const { return std::holds_alternative<Sig>(v_); }
    const Sig& sym() const { return std::get<Sig>(v_); }
    GeneralSignature general() const;
    /// Value on an input index (bit n-1-j holds input j).
    const Alg& value(unsigned idx) const;
    Label transformed(const Transform2x2& t) const;
    /// Same label with inputs rotated so that input `shift` becomes input 0.
    Label rotated_by(int shift) const;

private:
    std::variant<Sig, GeneralSignature> v_ = Sig();
};

struct Vertex {
    int id = 0;
    int sig = 0;                 // index into PlanarGrid::labels
    std::vector<int> rotation;   // half-edge ids, counterclockwise
    char side = 0;               // 'L', 'R', or 0
};

struct Dart {
    int half;    // starting half-edge
    int vertex;  // vertex index owning `half`
};

/// A face as the cyclic list of darts bounding it.
struct Face {
    std::vector<Dart> darts;
};

struct Topology {
    std::vector<int> vertex_of;  // half-edge id -> vertex index (-1 unused)
    std::vector<int> slot_of;    // half-edge id -> position in rotation
    std::vector<int> mate;       // half-edge id -> mate id, -1 dangling, -2 unused
    int max_half = -1;
};

class PlanarGrid {
public:
    std::vector<Label> labels;
    std::vector<std::string> label_names;
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> dangling;
    Alg scalar = 1;

    int add_label(Label l, std::string name = "");
    /// Adds a vertex with fresh half-edge ids; returns the vertex index.
    int add_vertex(int label, char side = 0);
    int add_vertex_with_rotation(int label, std::vector<int> rotation, char side = 0);
    /// Half-edge id in a vertex's slot.
    int half(int vertex, int slot) const { return vertices[vertex].rotation[slot]; }
    void connect(int v, int slot_v, int w, int slot_w);
    void add_edge(int h1, int h2) { edges.emplace_back(h1, h2); }
    int next_half_id() const;

    /// Structural check; throws StructureError.
    Topology topology() const;
    std::size_t edge_count() const { return edges.size(); }
    bool bipartite_tagged() const;
    /// Connected components as lists of vertex indices.
    std::vector<std::vector<int>> components() const;
};

struct ValidationResult {
    std::vector<Face> faces;
    bool genus_ok = true;
    int bad_component = -1;
};

/// Faces by next-edge-in-rotation traversal; dangling half-edges are skipped.
ValidationResult validate(const PlanarGrid& g);
/// Throws EmbeddingError when some component has positive genus.
void require_planar(const PlanarGrid& g);

Alg holant_bruteforce(const PlanarGrid& g, std::size_t cap = default_cap());

struct GateResult {
    GeneralSignature general;
    std::optional<Sig> symmetric;
};

GateResult gate_signature(const PlanarGrid& g, std::size_t cap = default_cap());

PlanarGrid two_stretch(const PlanarGrid& g);
PlanarGrid holographic_transform_bipartite(const PlanarGrid& g, const Transform2x2& t);
/// Applies T to every vertex; value-preserving when T is orthogonal.
PlanarGrid transform_all(const PlanarGrid& g, const Transform2x2& t);

/// Substitutes vertex `v` of `host` by gate `gate` (dangling order matched to v's rotation).
PlanarGrid compose_gate(const PlanarGrid& host, int v, const PlanarGrid& gate);

}  // namespace holant
