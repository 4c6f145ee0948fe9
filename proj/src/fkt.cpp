#include "holant/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace holant {

int WeightedPlanarGraph::add_edge(int u, int v, Alg w) {
    int e = static_cast<int>(edges.size());
    edges.push_back({u, v, std::move(w)});
    return e;
}

void WeightedPlanarGraph::rotation_from_coordinates(const std::vector<std::pair<double, double>>& xy) {
    if (static_cast<int>(xy.size()) != num_vertices) throw StructureError("one coordinate pair per vertex expected");
    rotation.assign(num_vertices, {});
    std::vector<std::vector<std::pair<double, int>>> by_angle(num_vertices);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [u, v, w] = edges[e];
        (void)w;
        double a = std::atan2(xy[v].second - xy[u].second, xy[v].first - xy[u].first);
        double b = std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first);
        by_angle[u].push_back({a, 2 * e});
        by_angle[v].push_back({b, 2 * e + 1});
    }
    for (int x = 0; x < num_vertices; ++x) {
        std::stable_sort(by_angle[x].begin(), by_angle[x].end(),
                         [](const auto& p, const auto& q) { return p.first < q.first; });
        for (auto& [a, d] : by_angle[x]) rotation[x].push_back(d);
    }
}

namespace {

bool negative_rational(const Alg& x) { return x.is_rational() && x.coeff(0) < 0; }

// Pfaffian of a skew-symmetric matrix by congruence elimination.
Alg pfaffian(std::vector<std::vector<Alg>> a) {
    const int n = static_cast<int>(a.size());
    if (n % 2) return 0;
    Alg pf = 1;
    for (int k = 0; k < n; k += 2) {
        int piv = -1;
        for (int j = k + 1; j < n; ++j)
            if (!a[k][j].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k + 1) {
            std::swap(a[k + 1], a[piv]);
            for (auto& row : a) std::swap(row[k + 1], row[piv]);
            pf = -pf;
        }
        const Alg p = a[k][k + 1];
        pf *= p;
        const Alg pinv = p.inverse();
        for (int i = k + 2; i < n; ++i) {
            if (a[k][i].is_zero()) continue;
            Alg c = a[k][i] * pinv;
            for (int j = k; j < n; ++j) a[i][j] -= c * a[k + 1][j];
            for (int j = k; j < n; ++j) a[j][i] -= c * a[j][k + 1];
        }
    }
    return pf;
}

struct Darts {
    std::vector<int> owner;  // dart -> vertex
    std::vector<int> next;   // dart -> next dart counterclockwise at its owner
};

}  // namespace

Alg fkt_count_pm(const WeightedPlanarGraph& g) {
    const int n = g.num_vertices;
    const int m = static_cast<int>(g.edges.size());
    if (n == 0) return 1;
    if (static_cast<int>(g.rotation.size()) != n) throw EmbeddingError("rotation system missing", -1);

    std::vector<bool> loop(m, false);
    for (int e = 0; e < m; ++e) {
        const auto& ed = g.edges[e];
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) throw StructureError("edge endpoint out of range");
        loop[e] = ed.u == ed.v;
    }

    Darts D;
    D.owner.assign(2 * m, -1);
    D.next.assign(2 * m, -1);
    for (int x = 0; x < n; ++x) {
        std::vector<int> r;
        for (int d : g.rotation[x]) {
            if (d < 0 || d >= 2 * m) throw StructureError("dart id out of range");
            int e = d / 2;
            int at = d % 2 ? g.edges[e].v : g.edges[e].u;
            if (at != x || D.owner[d] != -1) throw StructureError("dart listed at the wrong vertex or twice");
            D.owner[d] = x;
            if (!loop[e]) r.push_back(d);
        }
        for (std::size_t i = 0; i < r.size(); ++i) D.next[r[i]] = r[(i + 1) % r.size()];
    }
    for (int e = 0; e < m; ++e)
        if (D.owner[2 * e] < 0 || D.owner[2 * e + 1] < 0) throw StructureError("dart missing from rotation");

    // Components.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < m; ++e)
        if (!loop[e]) {
            adj[g.edges[e].u].push_back(e);
            adj[g.edges[e].v].push_back(e);
        }
    int nc = 0;
    std::vector<bool> tree(m, false);
    std::vector<bool> forward(m, true);  // true: u -> v
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = nc;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : adj[x]) {
                int y = g.edges[e].u == x ? g.edges[e].v : g.edges[e].u;
                if (comp[y] < 0) {
                    comp[y] = nc;
                    tree[e] = true;
                    q.push(y);
                }
            }
        }
        ++nc;
    }

    // Faces.
    std::vector<int> face_of(2 * m, -1);
    std::vector<std::vector<int>> faces;
    for (int d = 0; d < 2 * m; ++d) {
        if (loop[d / 2] || face_of[d] >= 0) continue;
        int f = static_cast<int>(faces.size());
        faces.emplace_back();
        int cur = d;
        while (face_of[cur] < 0) {
            face_of[cur] = f;
            faces[f].push_back(cur);
            cur = D.next[cur ^ 1];
        }
    }

    std::vector<int> cv(nc, 0), ce(nc, 0), cf(nc, 0);
    for (int x = 0; x < n; ++x) ++cv[comp[x]];
    for (int e = 0; e < m; ++e)
        if (!loop[e]) ++ce[comp[g.edges[e].u]];
    for (const auto& f : faces) ++cf[comp[D.owner[f[0]]]];
    for (int c = 0; c < nc; ++c) {
        if (ce[c] > 0 && cv[c] - ce[c] + cf[c] != 2) throw EmbeddingError("rotation system is not planar", c);
    }
    for (int c = 0; c < nc; ++c)
        if (cv[c] % 2) return 0;

    // Orientation: tree edges arbitrary, non-tree edges fixed over the dual tree.
    auto disagree = [&](int f) {
        int cnt = 0;
        for (int d : faces[f]) {
            int e = d / 2;
            bool along = (d % 2 == 0) == forward[e];
            if (!along) ++cnt;
        }
        return cnt;
    };
    const int nf = static_cast<int>(faces.size());
    std::vector<int> parent_edge(nf, -1), order;
    std::vector<bool> seen(nf, false);
    std::vector<int> root_of_comp(nc, -1);
    for (int f = 0; f < nf; ++f) {
        int c = comp[D.owner[faces[f][0]]];
        if (root_of_comp[c] < 0 || faces[f].size() > faces[root_of_comp[c]].size()) root_of_comp[c] = f;
    }
    for (int c = 0; c < nc; ++c) {
        int r = root_of_comp[c];
        if (r < 0) continue;
        std::queue<int> q;
        q.push(r);
        seen[r] = true;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            order.push_back(f);
            for (int d : faces[f]) {
                int e = d / 2;
                if (tree[e]) continue;
                int h = face_of[d ^ 1];
                if (!seen[h]) {
                    seen[h] = true;
                    parent_edge[h] = e;
                    q.push(h);
                }
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int f = *it;
        if (parent_edge[f] < 0) continue;
        if (disagree(f) % 2 == 0) forward[parent_edge[f]] = !forward[parent_edge[f]];
    }

    Alg total = 1;
    for (int c = 0; c < nc; ++c) {
        if (cv[c] == 0) continue;
        std::vector<int> idx(n, -1);
        int k = 0;
        for (int x = 0; x < n; ++x)
            if (comp[x] == c) idx[x] = k++;
        std::vector<std::vector<Alg>> a(k, std::vector<Alg>(k)), ones(k, std::vector<Alg>(k));
        for (int e = 0; e < m; ++e) {
            if (loop[e] || comp[g.edges[e].u] != c) continue;
            int i = idx[g.edges[e].u], j = idx[g.edges[e].v];
            if (!forward[e]) std::swap(i, j);
            a[i][j] += g.edges[e].w;
            a[j][i] -= g.edges[e].w;
            ones[i][j] += 1;
            ones[j][i] -= 1;
        }
        Alg sign = pfaffian(ones);
        if (sign.is_zero()) return 0;
        Alg pf = pfaffian(std::move(a));
        if (negative_rational(sign)) pf = -pf;
        total *= pf;
    }
    return total;
}

Alg pm_bruteforce(const WeightedPlanarGraph& g) {
    const int n = g.num_vertices;
    if (n % 2) return 0;
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (g.edges[e].u == g.edges[e].v) continue;
        inc[g.edges[e].u].push_back(e);
        inc[g.edges[e].v].push_back(e);
    }
    std::vector<bool> used(n, false);
    std::function<Alg()> rec = [&]() -> Alg {
        int x = 0;
        while (x < n && used[x]) ++x;
        if (x == n) return 1;
        Alg s = 0;
        used[x] = true;
        for (int e : inc[x]) {
            int y = g.edges[e].u == x ? g.edges[e].v : g.edges[e].u;
            if (used[y]) continue;
            used[y] = true;
            s += g.edges[e].w * rec();
            used[y] = false;
        }
        used[x] = false;
        return s;
    };
    return rec();
}

}  // namespace holant
