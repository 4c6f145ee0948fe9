#include "holant/solvers.hpp"
#include "solver_util.hpp"

#include <numeric>

namespace holant {

namespace {

// Parity union-find: value(x) = value(root) xor parity(x).
struct ParityDSU {
    std::vector<int> parent, parity;
    explicit ParityDSU(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        int p = 0;
        int r = x;
        while (parent[r] != r) {
            p ^= parity[r];
            r = parent[r];
        }
        // Path compression.
        int cur = x, acc = p;
        while (parent[cur] != cur) {
            int nxt = parent[cur];
            int old = parity[cur];
            parent[cur] = r;
            parity[cur] = acc;
            acc ^= old;
            cur = nxt;
        }
        return {r, p};
    }
    /// Imposes value(a) xor value(b) = d; false on conflict.
    bool unite(int a, int b, int d) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == d;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ d;
        return true;
    }
};

struct ProductForm {
    enum Kind { Zero, Unary, Equal, Differ } kind = Zero;
    Alg scale = 1;
    Vec2 unary{1, 1};   // per-incidence weights (Unary)
    Alg a = 0, b = 0;   // Equal weights
};

ProductForm product_form(const Sig& f) {
    ProductForm p;
    const int n = f.arity();
    if (f.is_zero()) return p;
    if (n == 0) {
        p.kind = ProductForm::Unary;
        p.scale = f[0];
        return p;
    }
    if (n == 1) {
        p.kind = ProductForm::Unary;
        p.unary = {f[0], f[1]};
        return p;
    }
    if (n == 2 && f[0].is_zero() && f[2].is_zero()) {
        p.kind = ProductForm::Differ;
        p.scale = f[1];
        return p;
    }
    bool middle_zero = true;
    for (int k = 1; k < n; ++k)
        if (!f[k].is_zero()) middle_zero = false;
    if (middle_zero) {
        p.kind = ProductForm::Equal;
        p.a = f[0];
        p.b = f[n];
        return p;
    }
    if (!f[0].is_zero()) {
        Alg r = f[1] / f[0];
        Alg pw = f[0];
        bool ok = true;
        for (int k = 0; k <= n && ok; ++k) {
            if (f[k] != pw) ok = false;
            pw *= r;
        }
        if (ok) {
            p.kind = ProductForm::Unary;
            p.scale = f[0];
            p.unary = {1, r};
            return p;
        }
    }
    throw ClassError("signature " + f.to_string() + " is not in P");
}

}  // namespace

Alg product_eval(const PlanarGrid& g) {
    auto se = detail::slot_edges(g);
    std::vector<ProductForm> forms;
    for (const auto& l : g.labels) {
        if (!l.is_symmetric()) throw ClassError("product evaluation needs symmetric signatures");
        forms.push_back(product_form(l.sym()));
    }
    const int m = static_cast<int>(g.edges.size());
    ParityDSU dsu(m);
    Alg scalar = g.scalar;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& p = forms[g.vertices[v].sig];
        const auto& es = se[v];
        switch (p.kind) {
            case ProductForm::Zero:
                return 0;
            case ProductForm::Differ:
                if (!dsu.unite(es[0], es[1], 1)) return 0;
                break;
            case ProductForm::Equal:
                for (std::size_t j = 1; j < es.size(); ++j)
                    if (!dsu.unite(es[0], es[j], 0)) return 0;
                break;
            case ProductForm::Unary:
                break;
        }
        scalar *= p.scale;
    }
    // Weight tables per component root.
    std::vector<std::array<Alg, 2>> w(m, {Alg(1), Alg(1)});
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& p = forms[g.vertices[v].sig];
        const auto& es = se[v];
        if (p.kind == ProductForm::Unary) {
            for (int e : es) {
                auto [r, par] = dsu.find(e);
                for (int x = 0; x < 2; ++x) w[r][x] *= p.unary[x ^ par];
            }
        } else if (p.kind == ProductForm::Equal && !es.empty()) {
            auto [r, par] = dsu.find(es[0]);
            w[r][par] *= p.a;
            w[r][1 ^ par] *= p.b;
        }
    }
    Alg total = scalar;
    for (int e = 0; e < m; ++e)
        if (dsu.find(e).first == e) total *= w[e][0] + w[e][1];
    return total;
}

}  // namespace holant
