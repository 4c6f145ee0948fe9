#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace holant::ts {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Alg random_alg(Rng& rng, int range) {
    Alg x;
    for (int k = 0; k < 4; ++k)
        if (coin(rng, k == 0 ? 0.9 : 0.35)) x += Alg(uniform(rng, -range, range)) * Alg::zeta_pow(k);
    return x;
}

Alg random_nonzero(Rng& rng, int range) {
    for (;;) {
        Alg x = random_alg(rng, range);
        if (!x.is_zero()) return x;
    }
}

Alg random_special(Rng& rng) {
    switch (uniform(rng, 0, 3)) {
        case 0: return Alg::zeta_pow(uniform(rng, 0, 7));
        case 1: return Alg(uniform(rng, 1, 3)) * Alg::zeta_pow(2 * uniform(rng, 0, 3));
        case 2: return Alg::rational(uniform(rng, 1, 3), uniform(rng, 1, 3)) * Alg::zeta_pow(uniform(rng, 0, 7));
        default: return random_nonzero(rng);
    }
}

Sig random_sig(Rng& rng, int arity, int range) {
    std::vector<Alg> e;
    for (int k = 0; k <= arity; ++k) e.push_back(coin(rng, 0.85) ? random_alg(rng, range) : Alg(0));
    return Sig(e);
}

Transform2x2 random_invertible(Rng& rng) {
    for (;;) {
        Transform2x2 t{random_alg(rng), random_alg(rng), random_alg(rng), random_alg(rng)};
        if (t.invertible()) return t;
    }
}

Transform2x2 random_orthogonal(Rng& rng) {
    static const int triples[][3] = {{1, 0, 1}, {0, 1, 1}, {3, 4, 5}, {4, 3, 5}, {5, 12, 13}, {8, 15, 17}};
    const auto& t = triples[uniform(rng, 0, 5)];
    Alg c = Alg::rational(t[0] * (coin(rng) ? 1 : -1), t[2]);
    Alg s = Alg::rational(t[1] * (coin(rng) ? 1 : -1), t[2]);
    if (coin(rng)) return {c, -s, s, c};
    return {c, s, s, -c};
}

namespace {

Transform2x2 random_rotation(Rng& rng) {
    for (;;) {
        Transform2x2 t = random_orthogonal(rng);
        if (t.det() == Alg(1)) return t;
    }
}

Sig sum(const Sig& a, const Sig& b) { return a + b; }

Sig p_member(Rng& rng, int n) {
    int kind = uniform(rng, 0, n == 2 ? 2 : 1);
    if (kind == 0) return tensor_power({random_alg(rng), random_alg(rng)}, n).scaled(random_nonzero(rng));
    if (kind == 1) return gen_eq(random_alg(rng), random_alg(rng), n);
    return Sig{0, random_nonzero(rng), 0};
}

Sig a_member(Rng& rng, int n) {
    Alg lambda = random_nonzero(rng);
    int a = uniform(rng, 0, 3), c = 2 * uniform(rng, 0, 1);
    std::vector<Alg> e(n + 1, Alg(0));
    int support = uniform(rng, 0, 4);
    if (support == 3 && n >= 1) {
        e[0] = lambda;
        e[n] = lambda * Alg::i().pow(a);
        return Sig(e);
    }
    if (support == 4) {
        e[coin(rng) ? 0 : n] = lambda;
        return Sig(e);
    }
    for (int k = 0; k <= n; ++k) {
        if (support == 1 && k % 2) continue;
        if (support == 2 && k % 2 == 0) continue;
        e[k] = lambda * Alg::i().pow(a * k + c * (k * (k - 1) / 2));
    }
    return Sig(e);
}

Sig matchgate_member(Rng& rng, int n) {
    int parity = uniform(rng, 0, 1);
    if (n == 0) parity = 0;
    Alg c = random_nonzero(rng), s = random_alg(rng), t = random_alg(rng);
    std::vector<Alg> e(n + 1, Alg(0));
    int count = 0;
    for (int k = parity; k <= n; k += 2) ++count;
    for (int k = parity, j = 0; k <= n; k += 2, ++j) e[k] = c * s.pow(count - 1 - j) * t.pow(j);
    return Sig(e);
}

Sig two_term(const Vec2& u, const Vec2& v, const Alg& beta, int n) {
    return sum(tensor_power(u, n), tensor_power(v, n).scaled(beta));
}

Sig vanishing_member(Rng& rng, int n, bool plus) {
    for (;;) {
        std::vector<Alg> h(n + 1, Alg(0));
        for (int k = 0; k <= n; ++k)
            if ((plus ? 2 * k < n : 2 * k > n) && coin(rng, 0.7)) h[k] = random_alg(rng);
        Sig hs(h);
        if (!hs.is_zero()) return transform(Transform2x2::Z(), hs);
    }
}

}  // namespace

Sig class_member(Rng& rng, TractableClass c, int n) {
    const Alg w = Alg::zeta(), I = Alg::i();
    const Alg scale = random_nonzero(rng);
    auto H = [&](const Sig& f) { return transform(random_orthogonal(rng), f).scaled(scale); };
    switch (c) {
        case TractableClass::P: return p_member(rng, n);
        case TractableClass::A: return a_member(rng, n);
        case TractableClass::Adagger: return transform(Transform2x2::diag(Alg(1), w), a_member(rng, n));
        case TractableClass::Matchgate: return matchgate_member(rng, n);
        case TractableClass::Mhat: return transform(Transform2x2::H(), matchgate_member(rng, n));
        case TractableClass::MhatDagger: return transform(Transform2x2::Z(), matchgate_member(rng, n));
        case TractableClass::Vplus: return vanishing_member(rng, n, true);
        case TractableClass::Vminus: return vanishing_member(rng, n, false);
        case TractableClass::P1:
            return H(two_term({Alg(1), Alg(1)}, {Alg(1), Alg(-1)}, random_nonzero(rng), n));
        case TractableClass::P2:
            return two_term({Alg(1), I}, {Alg(1), -I}, random_nonzero(rng), n).scaled(scale);
        case TractableClass::A1: {
            Alg beta = w.pow(uniform(rng, 0, 1) * n + 2 * uniform(rng, 0, 3));
            return H(two_term({Alg(1), Alg(1)}, {Alg(1), Alg(-1)}, beta, n));
        }
        case TractableClass::A3: return H(two_term({Alg(1), w}, {Alg(1), -w}, I.pow(uniform(rng, 0, 3)), n));
        case TractableClass::M1: {
            Alg beta = I.pow(n) * Alg(coin(rng) ? 1 : -1);
            return H(two_term({Alg(1), Alg(1)}, {Alg(1), Alg(-1)}, beta, n));
        }
        case TractableClass::M2: {
            Alg g = random_nonzero(rng);
            return H(two_term({Alg(1), g}, {Alg(1), -g}, Alg(coin(rng) ? 1 : -1), n));
        }
        case TractableClass::M3: return H(exact_one(n));
        case TractableClass::M4plus:
            return transform(random_rotation(rng), transform(Transform2x2::Z(), exact_one(n))).scaled(scale);
        case TractableClass::M4minus:
            return transform(random_rotation(rng), transform(Transform2x2::Z(), all_but_one(n))).scaled(scale);
        case TractableClass::ZP: return transform(Transform2x2::Z(), p_member(rng, n));
    }
    throw std::logic_error("unknown class");
}

// ---------------------------------------------------------------- planar maps

int PlanarMap::add_vertex() {
    rot.emplace_back();
    return static_cast<int>(rot.size()) - 1;
}

int PlanarMap::add_pendant(int v, int pos) {
    int u = add_vertex();
    int h = static_cast<int>(vert.size());
    vert.push_back(v);
    vert.push_back(u);
    rot[v].insert(rot[v].begin() + pos, h);
    rot[u] = {h + 1};
    return u;
}

void PlanarMap::add_chord(int da, int db) {
    int x = static_cast<int>(vert.size()), y = x + 1;
    int ma = da ^ 1, mb = db ^ 1;
    int wa = vert[ma], wb = vert[mb];
    vert.push_back(wa);
    vert.push_back(wb);
    auto insert_after = [&](int w, int anchor, int h) {
        auto it = std::find(rot[w].begin(), rot[w].end(), anchor);
        rot[w].insert(it + 1, h);
    };
    insert_after(wa, ma, x);
    insert_after(wb, da == db ? x : mb, y);
}

std::vector<std::vector<int>> PlanarMap::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(vert.size(), false);
    auto succ = [&](int h) {
        int m = h ^ 1;
        const auto& r = rot[vert[m]];
        auto it = std::find(r.begin(), r.end(), m);
        ++it;
        return it == r.end() ? r.front() : *it;
    };
    for (std::size_t s = 0; s < vert.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> f;
        int h = static_cast<int>(s);
        while (!seen[h]) {
            seen[h] = true;
            f.push_back(h);
            h = succ(h);
        }
        out.push_back(f);
    }
    return out;
}

std::vector<int> PlanarMap::degrees() const {
    std::vector<int> d;
    for (const auto& r : rot) d.push_back(static_cast<int>(r.size()));
    return d;
}

PlanarMap random_planar_map(Rng& rng, int vertices, int edges, bool loops, bool multi) {
    PlanarMap m;
    m.add_vertex();
    for (int i = 1; i < vertices; ++i) {
        int v = uniform(rng, 0, static_cast<int>(m.rot.size()) - 1);
        m.add_pendant(v, uniform(rng, 0, static_cast<int>(m.rot[v].size())));
    }
    int attempts = 0;
    while (m.edges() < edges && attempts++ < 200 * (edges + 1)) {
        auto fs = m.faces();
        if (fs.empty()) {
            if (!loops) break;
            // Lone vertex: a loop needs an existing corner, so start with a pendant-free loop.
            int x = static_cast<int>(m.vert.size());
            m.vert.push_back(0);
            m.vert.push_back(0);
            m.rot[0] = {x, x + 1};
            continue;
        }
        const auto& f = fs[uniform(rng, 0, static_cast<int>(fs.size()) - 1)];
        int a = f[uniform(rng, 0, static_cast<int>(f.size()) - 1)];
        int b = f[uniform(rng, 0, static_cast<int>(f.size()) - 1)];
        int wa = m.vert[a ^ 1], wb = m.vert[b ^ 1];
        if (wa == wb && !loops) continue;
        if (!multi && wa != wb) {
            bool dup = false;
            for (int h : m.rot[wa])
                if (m.vert[h ^ 1] == wb) dup = true;
            if (dup) continue;
        }
        m.add_chord(a, b);
    }
    return m;
}

PlanarGrid grid_from_map(const PlanarMap& m, const std::function<Sig(int, int)>& label_for) {
    PlanarGrid g;
    std::map<std::string, int> cache;
    for (std::size_t v = 0; v < m.rot.size(); ++v) {
        Sig f = label_for(static_cast<int>(v), static_cast<int>(m.rot[v].size()));
        std::string key = f.to_string();
        auto it = cache.find(key);
        int lab = it != cache.end() ? it->second : (cache[key] = g.add_label(f, "f" + std::to_string(cache.size())));
        int idx = g.add_vertex_with_rotation(lab, m.rot[v]);
        g.vertices[idx].id = static_cast<int>(v);
    }
    for (int e = 0; e < m.edges(); ++e) g.add_edge(2 * e, 2 * e + 1);
    return g;
}

PlanarGrid random_grid(Rng& rng, int max_edges, const std::function<Sig(int)>& pick) {
    int V = uniform(rng, 1, std::min(8, max_edges + 1));
    int E = uniform(rng, std::max(V - 1, 1), std::max(max_edges, 1));
    PlanarMap m = random_planar_map(rng, V, E);
    return grid_from_map(m, [&](int, int d) { return pick(d); });
}

PlanarGrid random_bipartite_grid(Rng& rng, int max_edges, const std::function<Sig(int)>& pick,
                                 const std::function<Label()>& binary) {
    int half = std::max(1, max_edges / 2);
    int V = uniform(rng, 1, std::min(6, half + 1));
    int E = uniform(rng, std::max(V - 1, 1), half);
    PlanarMap m = random_planar_map(rng, V, E);
    PlanarGrid g = grid_from_map(m, [&](int, int d) { return pick(d); });
    for (auto& v : g.vertices) v.side = 'R';
    g.edges.clear();
    int next = 2 * m.edges();
    for (int e = 0; e < m.edges(); ++e) {
        int lab = g.add_label(binary(), "b" + std::to_string(e));
        int a = next++, b = next++;
        g.add_vertex_with_rotation(lab, {a, b}, 'L');
        g.add_edge(2 * e, a);
        g.add_edge(b, 2 * e + 1);
    }
    return g;
}

EOInstance random_eo_instance(Rng& rng, const EOOptions& opt) {
    for (;;) {
        int L = uniform(rng, opt.min_links, opt.max_links);
        int V = uniform(rng, 2, std::max(2, std::min(L + 1, 2 + L / 3)));
        PlanarMap m = random_planar_map(rng, V, L);
        auto deg = m.degrees();
        std::vector<int> kind(V, 0);  // 0 ExactOne, 1 equality, 2 pin 0, 3 pin 1, 4 zero
        bool any_eq = false;
        for (int v = 0; v < V; ++v) {
            if ((deg[v] == 5 || deg[v] == 10) && coin(rng, 0.85)) {
                kind[v] = 1;
                any_eq = true;
            } else if (deg[v] == 1 && opt.pins && coin(rng, 0.4)) {
                kind[v] = coin(rng) ? 2 : 3;
            } else if (opt.pins && coin(rng, 0.02)) {
                kind[v] = 4;
            }
        }
        if (!any_eq) continue;
        auto w = [&]() { return opt.weighted ? random_nonzero(rng) : Alg(1); };
        PlanarGrid g;
        for (int v = 0; v < V; ++v) {
            int d = deg[v];
            Sig f;
            switch (kind[v]) {
                case 1: f = gen_eq(w(), w(), d); break;
                case 2: f = gen_eq(w(), Alg(0), d); break;
                case 3: f = gen_eq(Alg(0), w(), d); break;
                case 4: f = Sig(std::vector<Alg>(d + 1, Alg(0))); break;
                default: f = exact_one(d).scaled(w()); break;
            }
            int lab = g.add_label(f, "r" + std::to_string(v));
            int idx = g.add_vertex_with_rotation(lab, m.rot[v], 'R');
            g.vertices[idx].id = v;
        }
        int next = 2 * m.edges();
        for (int e = 0; e < m.edges(); ++e) {
            std::vector<Alg> vals{Alg(0), w(), w(), Alg(0)};
            int lab = g.add_label(Label(GeneralSignature(2, vals)), "l" + std::to_string(e));
            int a = next++, b = next++;
            int idx = g.add_vertex_with_rotation(lab, {a, b}, 'L');
            g.vertices[idx].id = V + e;
            g.add_edge(2 * e, a);
            g.add_edge(b, 2 * e + 1);
        }
        return EOInstance::from_grid(g);
    }
}

PlanarHypergraph random_hypergraph(Rng& rng, const std::vector<int>& sizes, int max_incidences) {
    // Map nodes are hyperedges (target size) or vertices (-1).
    PlanarMap m;
    std::vector<int> target;
    auto pick_size = [&] { return sizes[uniform(rng, 0, static_cast<int>(sizes.size()) - 1)]; };
    auto fresh_member = [&](int h) {
        int v = m.add_pendant(h, static_cast<int>(m.rot[h].size()));
        target.push_back(-1);
        return v;
    };
    int budget = max_incidences;
    // Planted matching: disjoint hyperedges, each its own component for now.
    do {
        int s = pick_size();
        if (s > budget && !m.rot.empty()) break;
        int h = m.add_vertex();
        target.push_back(s);
        for (int j = 0; j < s; ++j) fresh_member(h);
        budget -= s;
    } while (budget > 0 && coin(rng, 0.6));
    auto components = [&] {
        std::vector<int> comp(m.rot.size(), -1);
        for (std::size_t s0 = 0; s0 < m.rot.size(); ++s0) {
            if (comp[s0] >= 0) continue;
            std::vector<int> stack{static_cast<int>(s0)};
            comp[s0] = static_cast<int>(s0);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int h : m.rot[x]) {
                    int y = m.vert[h ^ 1];
                    if (comp[y] < 0) {
                        comp[y] = static_cast<int>(s0);
                        stack.push_back(y);
                    }
                }
            }
        }
        return comp;
    };
    // Extra hyperedges over existing vertices; chords stay inside a face or bridge two components.
    for (int extra = uniform(rng, 1, 3); extra > 0 && budget > 0; --extra) {
        int s = pick_size();
        if (s > budget) continue;
        std::vector<int> vs;
        for (int c = 0; c < static_cast<int>(m.rot.size()); ++c)
            if (target[c] < 0) vs.push_back(c);
        int v = vs[uniform(rng, 0, static_cast<int>(vs.size()) - 1)];
        int h = m.add_pendant(v, uniform(rng, 0, static_cast<int>(m.rot[v].size())));
        target.push_back(s);
        --budget;
        std::set<int> members{v};
        for (int j = 1; j < s; ++j, --budget) {
            auto comp = components();
            std::vector<std::pair<int, int>> options;
            for (const auto& face : m.faces()) {
                std::vector<int> at_h, at_v;
                for (int d : face) {
                    int end = m.vert[d ^ 1];
                    if (end == h) at_h.push_back(d);
                    else if (target[end] < 0 && !members.count(end)) at_v.push_back(d);
                }
                for (int x : at_h)
                    for (int y : at_v) options.push_back({x, y});
            }
            int corner = m.rot[h][0] ^ 1;  // a dart ending at h
            for (int d = 0; d < static_cast<int>(m.vert.size()); ++d) {
                int end = m.vert[d ^ 1];
                if (target[end] < 0 && !members.count(end) && comp[end] != comp[h]) options.push_back({corner, d});
            }
            if (options.empty()) {
                members.insert(fresh_member(h));
                continue;
            }
            auto [x, y] = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
            members.insert(m.vert[y ^ 1]);
            m.add_chord(x, y);
        }
    }
    // Emit: hyperedges in node order, members in rotation order at the hyperedge node.
    PlanarHypergraph out;
    std::map<int, int> incidence_of_half;  // half at the vertex-node end -> incidence id
    int next = 0;
    for (int c = 0; c < static_cast<int>(m.rot.size()); ++c)
        if (target[c] < 0) out.vertices.push_back(c);
    for (int c = 0; c < static_cast<int>(m.rot.size()); ++c) {
        if (target[c] < 0) continue;
        PlanarHypergraph::Hyperedge e;
        e.id = c;
        std::vector<int> rot;
        for (int h : m.rot[c]) {
            e.members.push_back(m.vert[h ^ 1]);
            incidence_of_half[h ^ 1] = next;
            rot.push_back(next++);
        }
        out.hyperedges.push_back(e);
        out.rotation["h" + std::to_string(c)] = rot;
    }
    for (int c = 0; c < static_cast<int>(m.rot.size()); ++c) {
        if (target[c] >= 0) continue;
        std::vector<int> rot;
        for (int h : m.rot[c]) rot.push_back(incidence_of_half.at(h));
        out.rotation["v" + std::to_string(c)] = rot;
    }
    return out;
}

// ---------------------------------------------------------------- oracles

namespace {

struct Flat {
    std::vector<std::vector<int>> edge_at;  // per vertex, edge index per slot
    std::vector<std::vector<int>> vertices_of_edge;
};

Flat flatten(const PlanarGrid& g) {
    if (!g.dangling.empty()) throw std::invalid_argument("oracle needs a closed grid");
    std::map<int, int> edge_of;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        edge_of[g.edges[e].first] = static_cast<int>(e);
        edge_of[g.edges[e].second] = static_cast<int>(e);
    }
    Flat f;
    f.vertices_of_edge.resize(g.edges.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::vector<int> row;
        for (int h : g.vertices[v].rotation) {
            row.push_back(edge_of.at(h));
            f.vertices_of_edge[edge_of.at(h)].push_back(static_cast<int>(v));
        }
        f.edge_at.push_back(row);
    }
    return f;
}

const Alg& entry(const Label& l, const std::vector<int>& edges, const std::vector<int>& x) {
    if (l.is_symmetric()) {
        int w = 0;
        for (int e : edges) w += x[e];
        return l.sym()[w];
    }
    unsigned idx = 0;
    const int n = static_cast<int>(edges.size());
    for (int j = 0; j < n; ++j)
        if (x[edges[j]]) idx |= 1u << (n - 1 - j);
    return l.value(idx);
}

}  // namespace

Alg naive_holant(const PlanarGrid& g) {
    Flat f = flatten(g);
    const int m = static_cast<int>(g.edges.size());
    if (m > 22) throw std::invalid_argument("naive oracle limited to 22 edges");
    Alg total;
    std::vector<int> x(m);
    for (unsigned long a = 0; a < (1ul << m); ++a) {
        for (int e = 0; e < m; ++e) x[e] = (a >> e) & 1;
        Alg prod = g.scalar;
        for (std::size_t v = 0; v < g.vertices.size() && !prod.is_zero(); ++v)
            prod *= entry(g.labels[g.vertices[v].sig], f.edge_at[v], x);
        total += prod;
    }
    return total;
}

std::vector<std::vector<int>> support_assignments(const PlanarGrid& g) {
    Flat f = flatten(g);
    const int m = static_cast<int>(g.edges.size());
    std::vector<int> remaining(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) remaining[v] = static_cast<int>(f.edge_at[v].size());
    std::vector<std::vector<int>> out;
    std::vector<int> x(m, 0);
    auto ok = [&](int v) { return !entry(g.labels[g.vertices[v].sig], f.edge_at[v], x).is_zero(); };
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (remaining[v] == 0 && !ok(static_cast<int>(v))) return out;
    std::function<void(int)> rec = [&](int e) {
        if (e == m) {
            out.push_back(x);
            return;
        }
        for (int val = 0; val < 2; ++val) {
            x[e] = val;
            bool fine = true;
            for (int v : f.vertices_of_edge[e]) --remaining[v];
            for (int v : f.vertices_of_edge[e])
                if (remaining[v] == 0 && !ok(v)) fine = false;
            if (fine) rec(e + 1);
            for (int v : f.vertices_of_edge[e]) ++remaining[v];
        }
        x[e] = 0;
    };
    rec(0);
    return out;
}

int edge_of_half(const PlanarGrid& g, int h) {
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e].first == h || g.edges[e].second == h) return static_cast<int>(e);
    return -1;
}

Alg det3_cofactor(const std::vector<std::vector<Alg>>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace holant::ts

namespace holant::ts {

int vd_by_factoring(const Sig& f, int sigma) {
    int n = f.arity();
    if (f.is_zero()) return n + 1;
    std::vector<Alg> p;
    for (int j = 0; j <= n; ++j) p.push_back(Alg(binomial(n, j)) * f[j]);
    const Alg root = sigma > 0 ? Alg::i() : -Alg::i();
    int mult = 0;
    for (;;) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
        if (p.size() <= 1) break;
        std::vector<Alg> q(p.size() - 1);
        Alg carry = 0;
        for (int j = static_cast<int>(p.size()) - 1; j >= 1; --j) {
            carry = p[j] + carry * root;
            q[j - 1] = carry;
        }
        if (!(p[0] + carry * root).is_zero()) break;
        p = q;
        ++mult;
    }
    return mult;
}

namespace {

bool in_recurrence_class(const Sig& f, int t, int sigma) {
    int n = f.arity();
    if (t > n) return true;
    const Alg s = sigma > 0 ? Alg::i() : -Alg::i();
    for (int k = 0; k + t <= n; ++k) {
        Alg acc;
        for (int j = 0; j <= t; ++j) acc += Alg(binomial(t, j)) * s.pow(j) * f[k + j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

int rd_by_recurrence(const Sig& f, int sigma) {
    if (f.is_zero()) return -1;
    for (int t = 0;; ++t)
        if (in_recurrence_class(f, t + 1, sigma)) return t;
}

int binary_eq_conditions(const Alg& f0, const Alg& f1, const Alg& f2, const std::vector<int>& S) {
    int d = 0;
    for (int r : S) d = std::gcd(d, r);
    const Alg a = f0.pow(d), b = f2.pow(d);
    const bool cs[] = {
        f0 * f2 == f1 * f1,
        f0.is_zero() && f2.is_zero(),
        f1.is_zero(),
        f0 * f2 + f1 * f1 == Alg(0) && a + b == Alg(0) && !a.is_zero(),
        a == b && !a.is_zero(),
    };
    for (int k = 0; k < 5; ++k)
        if (cs[k]) return k + 1;
    return 0;
}

Alg matchings_by_enumeration(const WeightedPlanarGraph& g) {
    std::vector<bool> used(g.num_vertices, false);
    std::function<Alg()> rec = [&]() -> Alg {
        int v = 0;
        while (v < g.num_vertices && used[v]) ++v;
        if (v == g.num_vertices) return Alg(1);
        Alg total;
        used[v] = true;
        for (const auto& e : g.edges) {
            if (e.u == e.v) continue;
            int w = e.u == v ? e.v : e.v == v ? e.u : -1;
            if (w < 0 || used[w]) continue;
            used[w] = true;
            total += e.w * rec();
            used[w] = false;
        }
        used[v] = false;
        return total;
    };
    return rec();
}

Alg hyperedge_covers_by_enumeration(const PlanarHypergraph& h) {
    std::set<int> covered;
    std::function<Alg(std::size_t)> rec = [&](std::size_t i) -> Alg {
        if (i == h.hyperedges.size()) return Alg(covered.size() == h.vertices.size() ? 1 : 0);
        Alg total = rec(i + 1);
        const auto& mem = h.hyperedges[i].members;
        bool free = true;
        for (int v : mem) free = free && !covered.count(v);
        if (free) {
            for (int v : mem) covered.insert(v);
            total += rec(i + 1);
            for (int v : mem) covered.erase(v);
        }
        return total;
    };
    return rec(0);
}

WeightedPlanarGraph graph_from_map(const PlanarMap& m, const std::vector<Alg>& weights) {
    WeightedPlanarGraph g;
    g.num_vertices = static_cast<int>(m.rot.size());
    for (int e = 0; e < m.edges(); ++e) g.add_edge(m.vert[2 * e], m.vert[2 * e + 1], weights[e]);
    g.rotation = m.rot;
    return g;
}

PlanarGrid matching_grid(const PlanarMap& m, const std::vector<Alg>& weights) {
    PlanarGrid g;
    for (std::size_t v = 0; v < m.rot.size(); ++v) {
        const auto& r = m.rot[v];
        const int d = static_cast<int>(r.size());
        std::vector<Alg> vals(std::size_t{1} << d, Alg(0));
        for (int j = 0; j < d; ++j) vals[1u << (d - 1 - j)] = r[j] % 2 == 0 ? weights[r[j] / 2] : Alg(1);
        int lab = g.add_label(Label(GeneralSignature(d, vals)), "v" + std::to_string(v));
        int idx = g.add_vertex_with_rotation(lab, r);
        g.vertices[idx].id = static_cast<int>(v);
    }
    for (int e = 0; e < m.edges(); ++e) g.add_edge(2 * e, 2 * e + 1);
    return g;
}

WeightedPlanarGraph grid_graph(int rows, int cols) {
    WeightedPlanarGraph g;
    g.num_vertices = rows * cols;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            xy.push_back({double(j), double(i)});
            if (j + 1 < cols) g.add_edge(i * cols + j, i * cols + j + 1);
            if (i + 1 < rows) g.add_edge(i * cols + j, (i + 1) * cols + j);
        }
    g.rotation_from_coordinates(xy);
    return g;
}

}  // namespace holant::ts
