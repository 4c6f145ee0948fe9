#include "holant/solvers.hpp"
#include "solver_util.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace holant {

namespace {

bool is_link_label(const Label& l) {
    return l.arity() == 2 && l.value(0).is_zero() && l.value(3).is_zero();
}

enum class RhsKind { Equality, ExactOne, PinZero, PinOne, Zero, Other };

struct RhsInfo {
    RhsKind kind = RhsKind::Other;
    Alg a = 0, b = 0;  // equality weights, or the pin / ExactOne scalar in a
};

RhsInfo rhs_info(const Label& l) {
    RhsInfo r;
    if (!l.is_symmetric()) return r;
    const Sig& f = l.sym();
    const int n = f.arity();
    if (f.is_zero()) {
        r.kind = RhsKind::Zero;
        return r;
    }
    if (n == 0) return r;
    std::vector<int> supp;
    for (int k = 0; k <= n; ++k)
        if (!f[k].is_zero()) supp.push_back(k);
    if (supp == std::vector<int>{0}) {
        r.kind = RhsKind::PinZero;
        r.a = f[0];
    } else if (supp == std::vector<int>{n}) {
        r.kind = RhsKind::PinOne;
        r.a = f[n];
    } else if (supp == std::vector<int>{1}) {
        r.kind = RhsKind::ExactOne;
        r.a = f[1];
    } else if (supp == std::vector<int>{0, n}) {
        r.kind = RhsKind::Equality;
        r.a = f[0];
        r.b = f[n];
    }
    return r;
}

std::vector<char> infer_sides(const PlanarGrid& g) {
    std::vector<char> side(g.vertices.size(), 0);
    if (g.bipartite_tagged()) {
        for (std::size_t v = 0; v < g.vertices.size(); ++v) side[v] = g.vertices[v].side;
        return side;
    }
    Topology t = g.topology();
    std::vector<int> color(g.vertices.size(), -1);
    for (std::size_t s = 0; s < g.vertices.size(); ++s) {
        if (color[s] >= 0) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        color[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int h : g.vertices[v].rotation) {
                int m = t.mate[h];
                if (m < 0) continue;
                int w = t.vertex_of[m];
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    throw NotBipartite("instance graph is not bipartite");
                }
            }
        }
        bool ok[2] = {true, true};
        for (int v : comp)
            if (!is_link_label(g.labels[g.vertices[v].sig])) ok[color[v]] = false;
        int left = ok[0] ? 0 : (ok[1] ? 1 : -1);
        if (left < 0) throw StructureError("no side of the instance consists of binary disequalities");
        for (int v : comp) side[v] = color[v] == left ? 'L' : 'R';
    }
    return side;
}

int gcd_all(const std::vector<int>& xs) {
    int k = 0;
    for (int x : xs) k = std::gcd(k, x);
    return k;
}

// ------------------------------------------------------------------ engine

struct Link {
    int node[2] = {-1, -1};
    Alg mu[2];  // weight by the value at end 0; end 1 carries the complement
    bool alive = true;
    int value = -1;
};

struct Node {
    bool eq = false;  // signed equality block, else ExactOne
    bool alive = true;
    std::vector<int> rot;     // incidence codes 2*link + end, counterclockwise
    std::vector<int> sign;    // per incidence for blocks: value = x xor sign
    Alg w[2] = {Alg(1), Alg(1)};
};

class Engine {
public:
    Engine(const EOInstance& inst, const EOTrace& trace) : trace_(trace) { build(inst); }

    Alg run() {
        drain();
        emit("init");
        while (!zero_) {
            std::size_t before = measure();
            if (simplify_once()) {
                check_progress(before);
                continue;
            }
            if (zero_) break;
            if (alive_nodes() == 0) break;
            auto pins = find_pins();
            if (pins.empty()) throw std::logic_error("no pinned edge found; the embedding may not be planar");
            if (trace_) {
                EOTraceEvent ev{"pin", residual(), scalar_, {}};
                for (auto [c, v] : pins) ev.pins.push_back({half_of(c), v});
                trace_(ev);
            }
            for (auto [c, v] : pins) fix(c, v);
            drain();
            check_progress(before);
            emit("pins applied");
        }
        return zero_ ? Alg(0) : scalar_;
    }

private:
    std::vector<Link> links_;
    std::vector<Node> nodes_;
    Alg scalar_ = 1;
    bool zero_ = false;
    std::deque<std::pair<int, int>> pending_;
    const EOTrace& trace_;

    // ---------------------------------------------------------- helpers
    int node_of(int c) const { return links_[c / 2].node[c % 2]; }
    Alg mu_at(int c, int val) const {
        const Link& l = links_[c / 2];
        return l.mu[c % 2 == 0 ? val : 1 - val];
    }
    void absorb(int c, const Alg& alpha) { links_[c / 2].mu[c % 2 == 0 ? 1 : 0] *= alpha; }
    static int half_of(int c) { return 2 * c; }

    std::size_t alive_nodes() const {
        std::size_t n = 0;
        for (const auto& x : nodes_) n += x.alive;
        return n;
    }
    std::size_t measure() const {
        std::size_t n = alive_nodes();
        for (const auto& l : links_) n += l.alive;
        return n;
    }
    void check_progress(std::size_t before) {
        if (!zero_ && measure() >= before) throw std::logic_error("rewrite step made no progress");
    }

    int pos(const Node& n, int c) const {
        auto it = std::find(n.rot.begin(), n.rot.end(), c);
        if (it == n.rot.end()) throw std::logic_error("incidence missing from its node");
        return static_cast<int>(it - n.rot.begin());
    }
    void erase_at(Node& n, int p) {
        n.rot.erase(n.rot.begin() + p);
        if (n.eq) n.sign.erase(n.sign.begin() + p);
    }
    void kill_link(int l) { links_[l].alive = false; }
    int new_link(int x, int cx_old, int y, int cy_old, Alg mu0, Alg mu1) {
        int l = static_cast<int>(links_.size());
        Link nl;
        nl.node[0] = x;
        nl.node[1] = y;
        nl.mu[0] = std::move(mu0);
        nl.mu[1] = std::move(mu1);
        links_.push_back(nl);
        Node& nx = nodes_[x];
        nx.rot[pos(nx, cx_old)] = 2 * l;
        Node& ny = nodes_[y];
        ny.rot[pos(ny, cy_old)] = 2 * l + 1;
        return l;
    }

    void fix(int c, int v) { pending_.push_back({c, v}); }

    void drain() {
        while (!pending_.empty() && !zero_) {
            auto [c, v] = pending_.front();
            pending_.pop_front();
            Link& l = links_[c / 2];
            int x = c % 2 == 0 ? v : 1 - v;
            if (l.value >= 0) {
                if (l.value != x) zero_ = true;
                continue;
            }
            if (!l.alive) throw std::logic_error("fixing a removed link");
            l.value = x;
            l.alive = false;
            scalar_ *= l.mu[x];
            for (int e = 0; e < 2; ++e) notify(l.node[e], 2 * (c / 2) + e, e == 0 ? x : 1 - x);
        }
        if (zero_) pending_.clear();
    }

    void notify(int id, int c, int val) {
        Node& n = nodes_[id];
        if (!n.alive) return;
        int p = pos(n, c);
        int s = n.eq ? n.sign[p] : 0;
        erase_at(n, p);
        if (n.eq) {
            int x = val ^ s;
            scalar_ *= n.w[x];
            n.alive = false;
            for (std::size_t j = 0; j < n.rot.size(); ++j) fix(n.rot[j], x ^ n.sign[j]);
        } else if (val == 1) {
            n.alive = false;
            for (int r : n.rot) fix(r, 0);
        } else if (n.rot.empty()) {
            zero_ = true;
        }
    }

    /// Rotation of `into` with incidence `at` replaced by the rotation of `from` after `from_at`.
    void splice(int into, int at, int from, int from_at, int flip) {
        Node& a = nodes_[into];
        const Node& b = nodes_[from];
        int pa = pos(a, at), pb = pos(b, from_at);
        std::vector<int> rot, sign;
        const int nb = static_cast<int>(b.rot.size());
        for (int i = 0; i < pa; ++i) {
            rot.push_back(a.rot[i]);
            if (a.eq) sign.push_back(a.sign[i]);
        }
        for (int j = 1; j < nb; ++j) {
            int q = (pb + j) % nb;
            rot.push_back(b.rot[q]);
            if (a.eq) sign.push_back(b.sign[q] ^ flip);
            Link& l = links_[b.rot[q] / 2];
            l.node[b.rot[q] % 2] = into;
        }
        for (int i = pa + 1; i < static_cast<int>(a.rot.size()); ++i) {
            rot.push_back(a.rot[i]);
            if (a.eq) sign.push_back(a.sign[i]);
        }
        a.rot = std::move(rot);
        a.sign = std::move(sign);
    }

    // ---------------------------------------------------------- construction
    void build(const EOInstance& inst) {
        const PlanarGrid& g = inst.grid;
        scalar_ = g.scalar;
        Topology t = g.topology();
        std::vector<char> side = infer_sides(g);
        std::vector<int> code_of_half(t.max_half + 1, -1);
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            if (side[v] != 'L') continue;
            const Label& lab = g.labels[g.vertices[v].sig];
            int l = static_cast<int>(links_.size());
            Link nl;
            nl.mu[0] = lab.value(1);
            nl.mu[1] = lab.value(2);
            links_.push_back(nl);
            for (int e = 0; e < 2; ++e) {
                int h = g.vertices[v].rotation[e];
                code_of_half[t.mate[h]] = 2 * l + e;
            }
        }
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            if (side[v] != 'R') continue;
            RhsInfo info = rhs_info(g.labels[g.vertices[v].sig]);
            int id = static_cast<int>(nodes_.size());
            Node n;
            for (int h : g.vertices[v].rotation) {
                int c = code_of_half[h];
                n.rot.push_back(c);
                links_[c / 2].node[c % 2] = id;
            }
            switch (info.kind) {
                case RhsKind::Equality:
                    n.eq = true;
                    n.sign.assign(n.rot.size(), 0);
                    n.w[0] = info.a;
                    n.w[1] = info.b;
                    break;
                case RhsKind::ExactOne:
                    scalar_ *= info.a;
                    break;
                case RhsKind::PinZero:
                case RhsKind::PinOne:
                    scalar_ *= info.a;
                    n.alive = false;
                    for (int c : n.rot) fix(c, info.kind == RhsKind::PinOne ? 1 : 0);
                    break;
                case RhsKind::Zero:
                    zero_ = true;
                    n.alive = false;
                    break;
                case RhsKind::Other:
                    throw StructureError("signature is not of an allowed right-hand kind");
            }
            nodes_.push_back(std::move(n));
        }
    }

    // ---------------------------------------------------------- local rules
    bool simplify_once() {
        for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
            if (!nodes_[id].alive) continue;
            const char* rule = nodes_[id].eq ? block_rule(id) : exact_one_rule(id);
            if (rule) {
                drain();
                emit(rule);
                return true;
            }
        }
        return false;
    }

    int self_loop(const Node& n) const {
        for (int c : n.rot)
            if (node_of(c ^ 1) == node_of(c) && c % 2 == 0) return c / 2;
        return -1;
    }

    const char* exact_one_rule(int id) {
        Node& n = nodes_[id];
        if (n.rot.empty()) {
            zero_ = true;
            return "empty ExactOne";
        }
        if (n.rot.size() == 1) {
            n.alive = false;
            fix(n.rot[0], 1);
            return "ExactOne_1 pin";
        }
        if (int l = self_loop(n); l >= 0) {
            scalar_ *= links_[l].mu[0] + links_[l].mu[1];
            kill_link(l);
            erase_at(n, pos(n, 2 * l));
            erase_at(n, pos(n, 2 * l + 1));
            n.alive = false;
            for (int c : n.rot) fix(c, 0);
            return "ExactOne self-loop";
        }
        if (n.rot.size() == 2) {
            int c1 = n.rot[0], c2 = n.rot[1];
            int o1 = c1 ^ 1, o2 = c2 ^ 1;
            int x = node_of(o1), y = node_of(o2);
            Alg m0 = mu_at(o1, 0) * mu_at(o2, 1);
            Alg m1 = mu_at(o1, 1) * mu_at(o2, 0);
            n.alive = false;
            kill_link(c1 / 2);
            kill_link(c2 / 2);
            new_link(x, o1, y, o2, m0, m1);
            return "right-hand disequality spliced";
        }
        // Adjacent ExactOne nodes.
        std::map<int, std::vector<int>> by;
        for (int c : n.rot) {
            int m = node_of(c ^ 1);
            if (m != id && !nodes_[m].eq) by[m].push_back(c);
        }
        if (by.empty()) return nullptr;
        auto& [m, cs] = *by.begin();
        Node& o = nodes_[m];
        if (cs.size() >= 3) {
            zero_ = true;
            return "ExactOne pair joined three times";
        }
        if (cs.size() == 2) {
            int a1 = cs[0], a2 = cs[1];
            scalar_ *= mu_at(a1, 1) * mu_at(a2, 0) + mu_at(a1, 0) * mu_at(a2, 1);
            kill_link(a1 / 2);
            kill_link(a2 / 2);
            erase_at(n, pos(n, a1));
            erase_at(n, pos(n, a2));
            erase_at(o, pos(o, a1 ^ 1));
            erase_at(o, pos(o, a2 ^ 1));
            n.alive = false;
            o.alive = false;
            for (int c : n.rot) fix(c, 0);
            for (int c : o.rot) fix(c, 0);
            return "ExactOne pair joined twice";
        }
        int cn = cs[0], cm = cn ^ 1;
        Alg alpha = mu_at(cn, 0), beta = mu_at(cn, 1);
        for (int c : n.rot)
            if (c != cn) absorb(c, alpha);
        for (int c : o.rot)
            if (c != cm) absorb(c, beta);
        kill_link(cn / 2);
        splice(id, cn, m, cm, 0);
        o.alive = false;
        return "ExactOne merge";
    }

    const char* block_rule(int id) {
        Node& n = nodes_[id];
        if (n.rot.empty()) {
            scalar_ *= n.w[0] + n.w[1];
            n.alive = false;
            return "closed block";
        }
        if (int l = self_loop(n); l >= 0) {
            int p0 = pos(n, 2 * l), p1 = pos(n, 2 * l + 1);
            int s0 = n.sign[p0], s1 = n.sign[p1];
            if (s0 == s1) {
                zero_ = true;
                return "trivial block";
            }
            for (int x = 0; x < 2; ++x) n.w[x] *= links_[l].mu[x ^ s0];
            kill_link(l);
            erase_at(n, pos(n, 2 * l));
            erase_at(n, pos(n, 2 * l + 1));
            return "block self-loop";
        }
        for (std::size_t j = 0; j < n.rot.size(); ++j) {
            int c = n.rot[j];
            int m = node_of(c ^ 1);
            if (m == id || !nodes_[m].eq) continue;
            Node& o = nodes_[m];
            int sn = n.sign[j];
            int tm = o.sign[pos(o, c ^ 1)];
            int flip = sn ^ tm ^ 1;
            Alg w[2];
            for (int x = 0; x < 2; ++x) w[x] = n.w[x] * o.w[x ^ flip] * mu_at(c, x ^ sn);
            n.w[0] = w[0];
            n.w[1] = w[1];
            kill_link(c / 2);
            splice(id, c, m, c ^ 1, flip);
            o.alive = false;
            return "block merge";
        }
        if (n.rot.size() == 1) throw std::logic_error("block of arity 1 violates the sign balance");
        if (n.rot.size() == 2) {
            if (n.sign[0] == n.sign[1]) throw std::logic_error("binary block with equal signs");
            int p = n.rot[0], q = n.rot[1];
            int op = p ^ 1, oq = q ^ 1;
            int x = node_of(op), y = node_of(oq);
            Alg m[2];
            for (int v = 0; v < 2; ++v) m[v] = mu_at(op, v) * n.w[(1 - v) ^ n.sign[0]] * mu_at(oq, 1 - v);
            n.alive = false;
            kill_link(p / 2);
            kill_link(q / 2);
            new_link(x, op, y, oq, m[0], m[1]);
            return "binary block to disequality";
        }
        return nullptr;
    }

    // ---------------------------------------------------------- pin search
    using Pins = std::vector<std::pair<int, int>>;

    Pins find_pins() {
        Pins p = parallel_pins();
        if (!p.empty()) return p;
        return relaxed_pins();
    }

    Pins parallel_pins() {
        for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
            const Node& x = nodes_[id];
            if (!x.alive || !x.eq) continue;
            std::map<int, std::vector<int>> by;
            for (std::size_t j = 0; j < x.rot.size(); ++j) by[node_of(x.rot[j] ^ 1)].push_back(static_cast<int>(j));
            for (auto& [r, js] : by) {
                if (js.size() < 2) continue;
                int p = x.rot[js[0]], q = x.rot[js[1]];
                if (x.sign[js[0]] == x.sign[js[1]]) return {{p ^ 1, 0}, {q ^ 1, 0}};
                Pins out;
                for (int c : nodes_[r].rot)
                    if (c != (p ^ 1) && c != (q ^ 1)) out.push_back({c, 0});
                return out;
            }
        }
        return {};
    }

    struct HEdge {
        int block, tree, code, sign;  // code at the ExactOne side
    };

    Pins relaxed_pins() {
        const int nn = static_cast<int>(nodes_.size());
        // Relax blocks of arity 4 into two disequalities between rotation neighbours.
        std::vector<std::pair<int, int>> virt;  // pairs of ExactOne-side codes
        for (int id = 0; id < nn; ++id) {
            const Node& x = nodes_[id];
            if (!x.alive || !x.eq || x.rot.size() != 4) continue;
            const auto& s = x.sign;
            std::array<std::pair<int, int>, 2> pr;
            if (s[0] != s[1] && s[2] != s[3])
                pr = {std::pair{0, 1}, std::pair{2, 3}};
            else if (s[1] != s[2] && s[3] != s[0])
                pr = {std::pair{1, 2}, std::pair{3, 0}};
            else
                throw std::logic_error("arity-4 block without balanced signs");
            for (auto [a, b] : pr) virt.push_back({x.rot[a] ^ 1, x.rot[b] ^ 1});
        }
        std::vector<int> uf(nn);
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
        std::vector<std::vector<std::pair<int, int>>> tadj(nn);  // node -> (other node, virt index)
        for (int vi = 0; vi < static_cast<int>(virt.size()); ++vi) {
            auto [ca, cb] = virt[vi];
            int a = node_of(ca), b = node_of(cb);
            if (a == b || find(a) == find(b)) return cycle_pins(virt, tadj, vi);
            uf[find(a)] = find(b);
            tadj[a].push_back({b, vi});
            tadj[b].push_back({a, vi});
        }
        // Trees merged into single ExactOne nodes; bipartite graph against the remaining blocks.
        std::set<int> relaxed_codes;
        for (auto [ca, cb] : virt) {
            relaxed_codes.insert(ca);
            relaxed_codes.insert(cb);
        }
        std::vector<HEdge> hedges;
        std::map<int, std::vector<int>> ext;  // tree -> external codes
        for (int id = 0; id < nn; ++id) {
            const Node& r = nodes_[id];
            if (!r.alive || r.eq) continue;
            for (int c : r.rot) {
                if (relaxed_codes.count(c)) continue;
                int b = node_of(c ^ 1);
                const Node& bx = nodes_[b];
                hedges.push_back({b, find(id), c, bx.sign[pos(bx, c ^ 1)]});
                ext[find(id)].push_back(c);
            }
        }
        std::sort(hedges.begin(), hedges.end(),
                  [](const HEdge& a, const HEdge& b) { return std::tie(a.block, a.code) < std::tie(b.block, b.code); });
        // Parallel edges between a block and a merged node.
        for (std::size_t i = 0; i < hedges.size(); ++i)
            for (std::size_t j = i + 1; j < hedges.size() && hedges[j].block == hedges[i].block; ++j) {
                if (hedges[i].tree != hedges[j].tree) continue;
                int p = hedges[i].code, q = hedges[j].code;
                if (hedges[i].sign == hedges[j].sign) return {{p, 0}, {q, 0}};
                Pins out;
                for (int c : ext[hedges[i].tree])
                    if (c != p && c != q) out.push_back({c, 0});
                if (out.empty()) throw std::logic_error("merged ExactOne of arity 2");
                return out;
            }
        return wheel_pins(hedges, ext);
    }

    Pins cycle_pins(const std::vector<std::pair<int, int>>& virt,
                    const std::vector<std::vector<std::pair<int, int>>>& tadj, int closing) {
        auto [ca, cb] = virt[closing];
        int a = node_of(ca), b = node_of(cb);
        std::vector<int> path_edges;
        if (a != b) {
            std::map<int, std::pair<int, int>> prev;  // node -> (parent, virt index)
            std::queue<int> q;
            q.push(b);
            prev[b] = {-1, -1};
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                if (u == a) break;
                for (auto [w, vi] : tadj[u])
                    if (!prev.count(w)) {
                        prev[w] = {u, vi};
                        q.push(w);
                    }
            }
            for (int u = a; u != b; u = prev[u].first) path_edges.push_back(prev[u].second);
        }
        path_edges.push_back(closing);
        std::set<int> on_cycle, nodes;
        for (int vi : path_edges) {
            on_cycle.insert(virt[vi].first);
            on_cycle.insert(virt[vi].second);
            nodes.insert(node_of(virt[vi].first));
            nodes.insert(node_of(virt[vi].second));
        }
        Pins out;
        for (int u : nodes)
            for (int c : nodes_[u].rot)
                if (!on_cycle.count(c)) out.push_back({c, 0});
        return out;
    }

    Pins wheel_pins(const std::vector<HEdge>& hedges, std::map<int, std::vector<int>>& ext) {
        std::map<int, std::vector<HEdge>> at_block, at_tree;
        for (const auto& h : hedges) {
            at_block[h.block].push_back(h);
            at_tree[h.tree].push_back(h);
        }
        for (auto& [x, spokes] : at_block) {
            if (spokes.size() != 5) continue;
            bool same = true;
            for (const auto& s : spokes) same = same && s.sign == spokes[0].sign;
            if (!same) continue;
            int high = 0;
            for (const auto& s : spokes) high += ext[s.tree].size() > 3;
            if (high > 1) continue;
            // Rim edges of each spoke node, excluding the spoke itself.
            std::vector<std::vector<HEdge>> rim(5);
            for (int j = 0; j < 5; ++j)
                for (const auto& h : at_tree[spokes[j].tree])
                    if (h.block != x) rim[j].push_back(h);
            std::vector<int> order{0, 1, 2, 3, 4};
            do {
                if (order[0] != 0) continue;
                // chosen[j] = (edge into the rim block after order[j], edge of order[j+1] into it)
                std::vector<std::pair<HEdge, HEdge>> chosen;
                if (!rim_search(order, rim, 0, chosen)) continue;
                for (const auto& [e1, e2] : chosen)
                    if (e1.sign != e2.sign) {
                        Pins out;
                        for (const auto& s : spokes) out.push_back({s.code, 0});
                        return out;
                    }
                if (high == 0) {
                    Pins out;
                    for (const auto& s : spokes) out.push_back({s.code, 1});
                    return out;
                }
                for (int j = 0; j < 5; ++j) {
                    int t = order[j];
                    if (ext[spokes[t].tree].size() <= 3) continue;
                    const HEdge& into_next = chosen[j].first;
                    const HEdge& from_prev = chosen[(j + 4) % 5].second;
                    return {{into_next.code, 0}, {from_prev.code, 0}};
                }
            } while (std::next_permutation(order.begin(), order.end()));
        }
        return {};
    }

    bool rim_search(const std::vector<int>& order, const std::vector<std::vector<HEdge>>& rim, int j,
                    std::vector<std::pair<HEdge, HEdge>>& chosen) {
        if (j == 5) {
            // Each spoke node uses two distinct rim edges, and all its rim edges when it has degree 3.
            for (int t = 0; t < 5; ++t) {
                const HEdge& a = chosen[t].first;
                const HEdge& b = chosen[(t + 4) % 5].second;
                if (a.code == b.code) return false;
            }
            return true;
        }
        int u = order[j], v = order[(j + 1) % 5];
        for (const auto& a : rim[u])
            for (const auto& b : rim[v]) {
                if (a.block != b.block) continue;
                chosen.push_back({a, b});
                if (rim_search(order, rim, j + 1, chosen)) return true;
                chosen.pop_back();
            }
        return false;
    }

    // ---------------------------------------------------------- trace
    void emit(const char* step) {
        if (!trace_ || zero_) return;
        trace_(EOTraceEvent{step, residual(), scalar_, {}});
    }

    PlanarGrid residual() const {
        PlanarGrid g;
        for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
            if (!links_[l].alive) continue;
            std::vector<Alg> vals(4);
            vals[1] = links_[l].mu[0];
            vals[2] = links_[l].mu[1];
            int lab = g.add_label(Label(GeneralSignature(2, vals)), "link");
            g.add_vertex_with_rotation(lab, {4 * l + 1, 4 * l + 3}, 'L');
            g.add_edge(4 * l, 4 * l + 1);
            g.add_edge(4 * l + 2, 4 * l + 3);
        }
        for (const auto& n : nodes_) {
            if (!n.alive) continue;
            const int d = static_cast<int>(n.rot.size());
            int lab;
            if (n.eq) {
                std::vector<Alg> vals(std::size_t{1} << d);
                for (int x = 0; x < 2; ++x) {
                    unsigned idx = 0;
                    for (int j = 0; j < d; ++j)
                        if (x ^ n.sign[j]) idx |= 1u << (d - 1 - j);
                    vals[idx] += n.w[x];
                }
                lab = g.add_label(Label(GeneralSignature(d, vals)), "block");
            } else {
                lab = g.add_label(Label(exact_one(d)), "ExactOne");
            }
            std::vector<int> rot;
            for (int c : n.rot) rot.push_back(half_of(c));
            g.add_vertex_with_rotation(lab, rot, 'R');
        }
        return g;
    }
};

}  // namespace

EOInstance EOInstance::from_grid(const PlanarGrid& g) {
    g.topology();
    if (!g.dangling.empty()) throw StructureError("instance has dangling edges");
    std::vector<char> side = infer_sides(g);
    std::vector<int> arities;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Label& l = g.labels[g.vertices[v].sig];
        if (side[v] == 'L') {
            if (!is_link_label(l)) throw StructureError("left-hand vertices must be binary disequalities");
            continue;
        }
        RhsInfo r = rhs_info(l);
        if (r.kind == RhsKind::Other) throw StructureError("right-hand signature of an unsupported kind");
        if (r.kind == RhsKind::Equality) arities.push_back(l.arity());
    }
    EOInstance inst;
    inst.grid = g;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) inst.grid.vertices[v].side = side[v];
    inst.k = gcd_all(arities);
    if (!arities.empty() && inst.k < 5)
        throw GcdError("gcd of equality arities is " + std::to_string(inst.k) + ", below 5");
    require_planar(inst.grid);
    return inst;
}

std::vector<EBlock> find_eblocks(const EOInstance& inst) {
    const PlanarGrid& g = inst.grid;
    Topology t = g.topology();
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<bool> is_eq(nv, false);
    for (int v = 0; v < nv; ++v)
        is_eq[v] = g.vertices[v].side == 'R' && rhs_info(g.labels[g.vertices[v].sig]).kind == RhsKind::Equality;
    // Left vertex next to half h, and the right vertex across it.
    auto left_of = [&](int h) { return t.vertex_of[t.mate[h]]; };
    auto across = [&](int h) {
        const auto& rot = g.vertices[left_of(h)].rotation;
        int other = rot[0] == t.mate[h] ? rot[1] : rot[0];
        return t.vertex_of[t.mate[other]];
    };
    std::vector<int> sign(nv, -1);
    std::vector<EBlock> out;
    for (int s = 0; s < nv; ++s) {
        if (!is_eq[s] || sign[s] >= 0) continue;
        EBlock b;
        std::queue<int> q;
        q.push(s);
        sign[s] = 0;
        std::set<int> links;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            b.vertices.push_back(v);
            for (int h : g.vertices[v].rotation) {
                int w = across(h);
                if (!is_eq[w]) continue;
                links.insert(left_of(h));
                if (sign[w] < 0) {
                    sign[w] = 1 - sign[v];
                    q.push(w);
                } else if (sign[w] == sign[v]) {
                    b.trivial = true;
                }
            }
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        for (int v : b.vertices)
            for (int h : g.vertices[v].rotation) {
                if (is_eq[across(h)]) continue;
                b.external.push_back(h);
                b.minus.push_back(sign[v] == 1);
            }
        // Weight of the support vector on which plus-marked vertices take value x.
        auto weight = [&](int x) {
            Alg w = 1;
            for (int v : b.vertices) {
                RhsInfo r = rhs_info(g.labels[g.vertices[v].sig]);
                w *= (x ^ sign[v]) ? r.b : r.a;
            }
            for (int lv : links) {
                const auto& rot = g.vertices[lv].rotation;
                int v0 = t.vertex_of[t.mate[rot[0]]], v1 = t.vertex_of[t.mate[rot[1]]];
                unsigned idx = 2u * static_cast<unsigned>(x ^ sign[v0]) + static_cast<unsigned>(x ^ sign[v1]);
                w *= g.labels[g.vertices[lv].sig].value(idx);
            }
            return w;
        };
        if (!b.trivial) {
            b.w_plus = weight(1);
            b.w_minus = weight(0);
        }
        out.push_back(std::move(b));
    }
    return out;
}

Alg eo_geneq_eval(const EOInstance& inst, const EOTrace& trace) {
    Engine e(inst, trace);
    return e.run();
}

}  // namespace holant
