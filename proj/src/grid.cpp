#include "holant/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

namespace holant {

std::size_t default_cap() {
    if (const char* env = std::getenv("HOLANT_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultCap;
}

int Label::arity() const {
    if (is_symmetric()) return std::get<Sig>(v_).arity();
    return std::get<GeneralSignature>(v_).arity();
}

GeneralSignature Label::general() const {
    if (is_symmetric()) return GeneralSignature::from_symmetric(std::get<Sig>(v_));
    return std::get<GeneralSignature>(v_);
}

const Alg& Label::value(unsigned idx) const {
    if (is_symmetric()) return std::get<Sig>(v_)[__builtin_popcount(idx)];
    return std::get<GeneralSignature>(v_).at(idx);
}

Label Label::transformed(const Transform2x2& t) const {
    if (is_symmetric()) return Label(transform(t, std::get<Sig>(v_)));
    return Label(std::get<GeneralSignature>(v_).transformed(t));
}

Label Label::rotated_by(int shift) const {
    int n = arity();
    if (n == 0 || is_symmetric()) return *this;
    shift = ((shift % n) + n) % n;
    const auto& g = std::get<GeneralSignature>(v_);
    std::vector<Alg> out(std::size_t{1} << n);
    for (unsigned xn = 0; xn < out.size(); ++xn) {
        unsigned xo = 0;
        for (int j = 0; j < n; ++j) {
            unsigned bit = (xn >> (n - 1 - j)) & 1u;
            int oj = (j + shift) % n;
            xo |= bit << (n - 1 - oj);
        }
        out[xn] = g.at(xo);
    }
    return Label(GeneralSignature(n, std::move(out)));
}

int PlanarGrid::add_label(Label l, std::string name) {
    labels.push_back(std::move(l));
    if (name.empty()) name = "s" + std::to_string(labels.size() - 1);
    label_names.push_back(std::move(name));
    return static_cast<int>(labels.size()) - 1;
}

int PlanarGrid::next_half_id() const {
    int m = -1;
    for (const auto& v : vertices)
        for (int h : v.rotation) m = std::max(m, h);
    return m + 1;
}

int PlanarGrid::add_vertex(int label, char side) {
    int n = labels.at(label).arity();
    int base = next_half_id();
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), base);
    return add_vertex_with_rotation(label, std::move(rot), side);
}

int PlanarGrid::add_vertex_with_rotation(int label, std::vector<int> rotation, char side) {
    Vertex v;
    v.id = vertices.empty() ? 0 : vertices.back().id + 1;
    v.sig = label;
    v.rotation = std::move(rotation);
    v.side = side;
    vertices.push_back(std::move(v));
    return static_cast<int>(vertices.size()) - 1;
}

void PlanarGrid::connect(int v, int slot_v, int w, int slot_w) { add_edge(half(v, slot_v), half(w, slot_w)); }

Topology PlanarGrid::topology() const {
    Topology t;
    for (const auto& v : vertices)
        for (int h : v.rotation) {
            if (h < 0) throw StructureError("negative half-edge id");
            t.max_half = std::max(t.max_half, h);
        }
    std::size_t sz = static_cast<std::size_t>(t.max_half + 1);
    t.vertex_of.assign(sz, -1);
    t.slot_of.assign(sz, -1);
    t.mate.assign(sz, -2);
    for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
        const auto& v = vertices[vi];
        if (v.sig < 0 || v.sig >= static_cast<int>(labels.size()))
            throw StructureError("vertex " + std::to_string(v.id) + " has unknown signature");
        if (labels[v.sig].arity() != static_cast<int>(v.rotation.size()))
            throw StructureError("vertex " + std::to_string(v.id) + " degree does not match signature arity");
        for (std::size_t s = 0; s < v.rotation.size(); ++s) {
            int h = v.rotation[s];
            if (t.vertex_of[h] != -1) throw StructureError("half-edge " + std::to_string(h) + " appears twice");
            t.vertex_of[h] = static_cast<int>(vi);
            t.slot_of[h] = static_cast<int>(s);
        }
    }
    auto claim = [&](int h, int m) {
        if (h < 0 || h > t.max_half || t.vertex_of[h] == -1)
            throw StructureError("half-edge " + std::to_string(h) + " is not in any rotation");
        if (t.mate[h] != -2) throw StructureError("half-edge " + std::to_string(h) + " is used twice");
        t.mate[h] = m;
    };
    for (const auto& [a, b] : edges) {
        if (a == b) throw StructureError("edge joins a half-edge to itself");
        claim(a, b);
        claim(b, a);
    }
    for (int h : dangling) claim(h, -1);
    for (int h = 0; h <= t.max_half; ++h)
        if (t.vertex_of[h] != -1 && t.mate[h] == -2)
            throw StructureError("half-edge " + std::to_string(h) + " is neither matched nor dangling");
    return t;
}

bool PlanarGrid::bipartite_tagged() const {
    if (vertices.empty()) return true;
    for (const auto& v : vertices)
        if (v.side != 'L' && v.side != 'R') return false;
    Topology t = topology();
    for (const auto& [a, b] : edges)
        if (vertices[t.vertex_of[a]].side == vertices[t.vertex_of[b]].side) return false;
    return true;
}

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> PlanarGrid::components() const {
    Topology t = topology();
    DSU d(vertices.size());
    for (const auto& [a, b] : edges) d.unite(t.vertex_of[a], t.vertex_of[b]);
    std::vector<std::vector<int>> out;
    std::vector<int> root_index(vertices.size(), -1);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        int r = d.find(static_cast<int>(v));
        if (root_index[r] < 0) {
            root_index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[root_index[r]].push_back(static_cast<int>(v));
    }
    return out;
}

ValidationResult validate(const PlanarGrid& g) {
    Topology t = g.topology();
    ValidationResult res;
    auto succ = [&](int h) {
        const auto& rot = g.vertices[t.vertex_of[h]].rotation;
        int s = t.slot_of[h];
        // Skip dangling half-edges; they do not bound faces.
        for (std::size_t step = 1; step <= rot.size(); ++step) {
            int c = rot[(s + step) % rot.size()];
            if (t.mate[c] >= 0) return c;
        }
        return h;
    };
    std::vector<char> seen(static_cast<std::size_t>(t.max_half + 1), 0);
    auto comps = g.components();
    std::vector<int> comp_of(g.vertices.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<long> faces_per(comps.size(), 0), edges_per(comps.size(), 0);
    for (const auto& e : g.edges) edges_per[comp_of[t.vertex_of[e.first]]]++;
    for (int h = 0; h <= t.max_half; ++h) {
        if (t.vertex_of[h] < 0 || t.mate[h] < 0 || seen[h]) continue;
        Face f;
        int cur = h;
        do {
            seen[cur] = 1;
            f.darts.push_back({cur, t.vertex_of[cur]});
            cur = succ(t.mate[cur]);
        } while (cur != h);
        faces_per[comp_of[t.vertex_of[h]]]++;
        res.faces.push_back(std::move(f));
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        long F = edges_per[c] == 0 ? 1 : faces_per[c];
        long chi = static_cast<long>(comps[c].size()) - edges_per[c] + F;
        if (chi != 2) {
            res.genus_ok = false;
            if (res.bad_component < 0) res.bad_component = static_cast<int>(c);
        }
    }
    return res;
}

void require_planar(const PlanarGrid& g) {
    auto r = validate(g);
    if (!r.genus_ok)
        throw EmbeddingError("rotation system has positive genus in component " + std::to_string(r.bad_component),
                             r.bad_component);
}

namespace {

class Enumerator {
public:
    Enumerator(const PlanarGrid& g, const Topology& t) : g_(g) {
        std::size_t nv = g.vertices.size();
        arity_.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) arity_[v] = static_cast<int>(g.vertices[v].rotation.size());
        // Edge order: breadth-first over vertices so that vertices complete early.
        std::vector<std::vector<int>> inc(nv);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            inc[t.vertex_of[g.edges[e].first]].push_back(static_cast<int>(e));
            inc[t.vertex_of[g.edges[e].second]].push_back(static_cast<int>(e));
        }
        std::vector<char> vseen(nv, 0), eseen(g.edges.size(), 0);
        for (std::size_t s = 0; s < nv; ++s) {
            if (vseen[s]) continue;
            std::deque<int> q{static_cast<int>(s)};
            vseen[s] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int e : inc[v]) {
                    if (eseen[e]) continue;
                    eseen[e] = 1;
                    order_.push_back(e);
                    for (int h : {g.edges[e].first, g.edges[e].second}) {
                        int w = t.vertex_of[h];
                        if (!vseen[w]) {
                            vseen[w] = 1;
                            q.push_back(w);
                        }
                    }
                }
            }
        }
        std::size_t ne = order_.size();
        ends_.resize(ne);
        completes_.assign(ne, {});
        std::vector<int> last(nv, -1);
        for (std::size_t i = 0; i < ne; ++i) {
            const auto& [a, b] = g.edges[order_[i]];
            for (int k = 0; k < 2; ++k) {
                int h = k == 0 ? a : b;
                int v = t.vertex_of[h];
                ends_[i][k] = {v, arity_[v] - 1 - t.slot_of[h]};
                last[v] = static_cast<int>(i);
            }
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (last[v] >= 0)
                completes_[last[v]].push_back(static_cast<int>(v));
            else
                isolated_.push_back(static_cast<int>(v));
        }
        idx_.assign(nv, 0);
        base_.assign(nv, 0);
        ones_.assign(nv, 0);
        base_ones_.assign(nv, 0);
        symmetric_.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) symmetric_[v] = g.labels[g.vertices[v].sig].is_symmetric();
        for (int h : g.dangling) {
            int v = t.vertex_of[h];
            dangling_pos_.push_back({v, arity_[v] - 1 - t.slot_of[h]});
        }
    }

    /// Sum with dangling inputs fixed to `bits` (bit n-1-j for dangling j).
    Alg run(unsigned bits) {
        std::fill(base_.begin(), base_.end(), 0u);
        std::fill(base_ones_.begin(), base_ones_.end(), 0);
        std::size_t nd = dangling_pos_.size();
        for (std::size_t j = 0; j < nd; ++j)
            if ((bits >> (nd - 1 - j)) & 1u) set(base_, base_ones_, dangling_pos_[j], 1u);
        Alg pre = 1;
        for (int v : isolated_) {
            pre *= value(v, base_[v]);
            if (pre.is_zero()) return pre;
        }
        idx_ = base_;
        ones_ = base_ones_;
        return pre * rec(0);
    }

private:
    // Symmetric labels are read by Hamming weight, so their arity may exceed the width of an index word.
    const Alg& value(int v) const {
        const Label& l = g_.labels[g_.vertices[v].sig];
        return symmetric_[v] ? l.sym()[ones_[v]] : l.value(idx_[v]);
    }
    const Alg& value(int v, unsigned idx) const {
        const Label& l = g_.labels[g_.vertices[v].sig];
        return symmetric_[v] ? l.sym()[base_ones_[v]] : l.value(idx);
    }

    void set(std::vector<unsigned>& idx, std::vector<int>& ones, const std::pair<int, int>& at, unsigned val) const {
        if (symmetric_[at.first])
            ones[at.first] += static_cast<int>(val);
        else
            idx[at.first] |= val << at.second;
    }
    void clear(const std::pair<int, int>& at, unsigned val) {
        if (symmetric_[at.first])
            ones_[at.first] -= static_cast<int>(val);
        else
            idx_[at.first] &= ~(val << at.second);
    }

    Alg rec(std::size_t i) {
        if (i == order_.size()) return Alg(1);
        Alg total;
        const auto& ends = ends_[i];
        for (unsigned val = 0; val < 2; ++val) {
            set(idx_, ones_, ends[0], val);
            set(idx_, ones_, ends[1], val);
            Alg factor = 1;
            bool zero = false;
            for (int v : completes_[i]) {
                const Alg& x = value(v);
                if (x.is_zero()) {
                    zero = true;
                    break;
                }
                if (!x.is_one()) factor *= x;
            }
            if (!zero) {
                Alg sub = rec(i + 1);
                if (!sub.is_zero()) total += factor.is_one() ? sub : factor * sub;
            }
            clear(ends[0], val);
            clear(ends[1], val);
        }
        return total;
    }

    const PlanarGrid& g_;
    std::vector<int> arity_;
    std::vector<int> order_;
    std::vector<std::array<std::pair<int, int>, 2>> ends_;
    std::vector<std::vector<int>> completes_;
    std::vector<int> isolated_;
    std::vector<std::pair<int, int>> dangling_pos_;
    std::vector<unsigned> idx_, base_;
    std::vector<int> ones_, base_ones_;
    std::vector<char> symmetric_;
};

}  // namespace

Alg holant_bruteforce(const PlanarGrid& g, std::size_t cap) {
    Topology t = g.topology();
    if (!g.dangling.empty()) throw StructureError("brute force needs a grid without dangling edges");
    if (g.edges.size() > cap) throw TooLarge("brute force", g.edges.size(), cap);
    Enumerator en(g, t);
    return g.scalar * en.run(0);
}

GateResult gate_signature(const PlanarGrid& g, std::size_t cap) {
    Topology t = g.topology();
    if (g.edges.size() > cap) throw TooLarge("gate", g.edges.size(), cap);
    if (g.dangling.size() > 20) throw TooLarge("gate arity", g.dangling.size(), 20);
    if (g.components().size() > 1) throw OrderError("gate must have a single connected component");
    // Close the dangling edges at a vertex in the outer face; its rotation is the reverse order.
    if (!g.dangling.empty()) {
        PlanarGrid closed = g;
        int base = t.max_half + 1;
        std::vector<int> rot;
        for (std::size_t j = 0; j < g.dangling.size(); ++j) {
            rot.push_back(base + static_cast<int>(j));
            closed.add_edge(g.dangling[j], base + static_cast<int>(j));
        }
        std::reverse(rot.begin(), rot.end());
        std::vector<Alg> dummy(std::size_t{1} << g.dangling.size());
        int lab = closed.add_label(Label(GeneralSignature(static_cast<int>(g.dangling.size()), dummy)));
        closed.dangling.clear();
        closed.add_vertex_with_rotation(lab, rot);
        if (!validate(closed).genus_ok)
            throw OrderError("dangling edges are not in counterclockwise order on one face");
    } else {
        require_planar(g);
    }
    Enumerator en(g, t);
    int n = static_cast<int>(g.dangling.size());
    std::vector<Alg> out(std::size_t{1} << n);
    for (unsigned bits = 0; bits < out.size(); ++bits) out[bits] = g.scalar * en.run(bits);
    GateResult r{GeneralSignature(n, std::move(out)), std::nullopt};
    r.symmetric = r.general.symmetric();
    return r;
}

PlanarGrid two_stretch(const PlanarGrid& g) {
    PlanarGrid out = g;
    for (auto& v : out.vertices) v.side = 'R';
    out.edges.clear();
    int eq = out.add_label(Label(eq_sig(2)), "=2");
    int next = g.next_half_id();
    for (const auto& [a, b] : g.edges) {
        int x = next++, y = next++;
        out.add_vertex_with_rotation(eq, {x, y}, 'L');
        out.add_edge(a, x);
        out.add_edge(y, b);
    }
    return out;
}

namespace {

PlanarGrid relabel(const PlanarGrid& g, const std::vector<Label>& per_vertex) {
    PlanarGrid out;
    out.edges = g.edges;
    out.dangling = g.dangling;
    out.scalar = g.scalar;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        int lab = out.add_label(per_vertex[v], g.label_names[g.vertices[v].sig] + "'");
        Vertex nv = g.vertices[v];
        nv.sig = lab;
        out.vertices.push_back(nv);
    }
    return out;
}

}  // namespace

PlanarGrid holographic_transform_bipartite(const PlanarGrid& g, const Transform2x2& t) {
    if (!g.bipartite_tagged()) throw NotBipartite("grid is not bipartite-tagged");
    Transform2x2 inv = t.inverse();
    Transform2x2 tt = t.transpose();
    std::vector<Label> labels;
    for (const auto& v : g.vertices)
        labels.push_back(v.side == 'L' ? g.labels[v.sig].transformed(tt) : g.labels[v.sig].transformed(inv));
    return relabel(g, labels);
}

PlanarGrid transform_all(const PlanarGrid& g, const Transform2x2& t) {
    std::vector<Label> labels;
    for (const auto& v : g.vertices) labels.push_back(g.labels[v.sig].transformed(t));
    return relabel(g, labels);
}

PlanarGrid compose_gate(const PlanarGrid& host, int v, const PlanarGrid& gate) {
    const auto& hv = host.vertices.at(v);
    if (gate.dangling.size() != hv.rotation.size()) throw StructureError("gate arity does not match vertex degree");
    PlanarGrid out;
    out.scalar = host.scalar * gate.scalar;
    int offset = host.next_half_id();
    std::vector<int> host_label(host.labels.size()), gate_label(gate.labels.size());
    for (std::size_t l = 0; l < host.labels.size(); ++l) host_label[l] = out.add_label(host.labels[l], host.label_names[l]);
    for (std::size_t l = 0; l < gate.labels.size(); ++l) gate_label[l] = out.add_label(gate.labels[l], gate.label_names[l]);
    for (std::size_t w = 0; w < host.vertices.size(); ++w) {
        if (static_cast<int>(w) == v) continue;
        Vertex nv = host.vertices[w];
        nv.sig = host_label[nv.sig];
        out.vertices.push_back(nv);
    }
    for (const auto& gv : gate.vertices) {
        Vertex nv = gv;
        nv.sig = gate_label[gv.sig];
        for (int& h : nv.rotation) h += offset;
        out.vertices.push_back(nv);
    }
    // Host half-edge in slot j of v is replaced by gate dangling j.
    std::vector<int> repl(static_cast<std::size_t>(host.next_half_id()), -1);
    for (std::size_t j = 0; j < hv.rotation.size(); ++j) repl[hv.rotation[j]] = gate.dangling[j] + offset;
    auto map_host = [&](int h) { return repl[h] >= 0 ? repl[h] : h; };
    for (const auto& [a, b] : host.edges) out.add_edge(map_host(a), map_host(b));
    for (const auto& [a, b] : gate.edges) out.add_edge(a + offset, b + offset);
    for (int h : host.dangling) out.dangling.push_back(map_host(h));
    for (std::size_t w = 0; w < out.vertices.size(); ++w) out.vertices[w].id = static_cast<int>(w);
    return out;
}

}  // namespace holant
