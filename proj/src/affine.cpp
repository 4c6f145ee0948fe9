#include "holant/solvers.hpp"
#include "solver_util.hpp"

#include <map>
#include <set>

namespace holant {

namespace {

Alg ipow(int k) { return Alg::zeta_pow(2L * (((k % 4) + 4) % 4)); }

int mod4(int x) { return ((x % 4) + 4) % 4; }

int exponent(int a, int c, int k) { return mod4(a * k + c * (k * (k - 1) / 2)); }

/// Quadratic form mod 4 over 0/1 variables; cross terms stay even.
struct Poly {
    int c0 = 0;
    std::map<int, int> lin;
    std::map<std::pair<int, int>, int> quad;

    /// Adds coef * t_u * t_v where -1 stands for the constant 1.
    void add(int coef, int u, int v) {
        coef = mod4(coef);
        if (!coef) return;
        if (u == -1 && v == -1) {
            c0 = mod4(c0 + coef);
        } else if (u == -1 || v == -1 || u == v) {
            int w = u == -1 ? v : u;
            int& r = lin[w];
            r = mod4(r + coef);
            if (!r) lin.erase(w);
        } else {
            auto key = std::minmax(u, v);
            int& r = quad[{key.first, key.second}];
            r = mod4(r + coef);
            if (!r) quad.erase({key.first, key.second});
        }
    }
};

/// Variable v replaced by the xor of terms (term -1 is the constant 1).
Poly substitute(const Poly& p, int v, const std::vector<int>& terms) {
    auto expand = [&](int u) -> std::vector<int> {
        if (u == v) return terms;
        return {u};
    };
    Poly out;
    out.c0 = p.c0;
    for (const auto& [u, coef] : p.lin) {
        auto t = expand(u);
        for (std::size_t i = 0; i < t.size(); ++i) {
            out.add(coef, t[i], -1);
            for (std::size_t j = i + 1; j < t.size(); ++j) out.add(-2 * coef, t[i], t[j]);
        }
    }
    for (const auto& [key, coef] : p.quad) {
        if (coef % 2) throw RepresentationError("odd cross term in affine form");
        auto tu = expand(key.first), tv = expand(key.second);
        for (int a : tu)
            for (int b : tv) out.add(coef, a, b);
    }
    return out;
}

struct Constraint {
    std::set<int> vars;
    int rhs = 0;
};

}  // namespace

std::optional<AffineForm> affine_form(const Sig& f) {
    using S = AffineForm::Support;
    const int n = f.arity();
    if (f.is_zero()) return std::nullopt;
    std::vector<int> supp;
    for (int k = 0; k <= n; ++k)
        if (!f[k].is_zero()) supp.push_back(k);
    AffineForm af;
    if (n >= 1 && supp == std::vector<int>{0}) {
        af.support = S::AllZero;
        af.lambda = f[0];
        return af;
    }
    if (n >= 1 && supp == std::vector<int>{n}) {
        af.support = S::AllOne;
        af.lambda = f[n];
        return af;
    }
    if (n >= 2 && supp == std::vector<int>{0, n}) {
        Alg r = f[n] / f[0];
        for (int a = 0; a < 4; ++a)
            if (r == ipow(a)) {
                af.support = S::Equal;
                af.lambda = f[0];
                af.a = a;
                return af;
            }
        return std::nullopt;
    }
    std::vector<int> all, even, odd;
    for (int k = 0; k <= n; ++k) {
        all.push_back(k);
        (k % 2 ? odd : even).push_back(k);
    }
    if (supp == all)
        af.support = S::All;
    else if (supp == even)
        af.support = S::Even;
    else if (supp == odd)
        af.support = S::Odd;
    else
        return std::nullopt;
    for (int c : {0, 2})
        for (int a = 0; a < 4; ++a) {
            int k0 = supp.front();
            Alg lambda = f[k0] / ipow(exponent(a, c, k0));
            bool ok = true;
            for (int k : supp)
                if (f[k] != lambda * ipow(exponent(a, c, k))) {
                    ok = false;
                    break;
                }
            if (ok) {
                af.lambda = lambda;
                af.a = a;
                af.c = c;
                return af;
            }
        }
    return std::nullopt;
}

Alg affine_eval(const PlanarGrid& g) {
    using S = AffineForm::Support;
    auto se = detail::slot_edges(g);
    std::vector<std::optional<AffineForm>> forms;
    std::vector<bool> zero;
    for (const auto& l : g.labels) {
        if (!l.is_symmetric()) throw ClassError("affine evaluation needs symmetric signatures");
        const Sig& f = l.sym();
        zero.push_back(f.is_zero());
        if (f.is_zero()) {
            forms.emplace_back();
            continue;
        }
        if (!in_A(f)) throw ClassError("signature " + f.to_string() + " is not in A");
        auto af = affine_form(f);
        if (!af) throw RepresentationError("no affine form for " + f.to_string());
        forms.push_back(af);
    }

    const int m = static_cast<int>(g.edges.size());
    Alg lambda = g.scalar;
    Poly poly;
    std::vector<Constraint> cons;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        int lab = g.vertices[v].sig;
        if (zero[lab]) return 0;
        const AffineForm& af = *forms[lab];
        const auto& xs = se[v];
        lambda *= af.lambda;
        switch (af.support) {
            case S::AllZero:
            case S::AllOne:
                for (int x : xs) cons.push_back({{x}, af.support == S::AllOne ? 1 : 0});
                break;
            case S::Equal:
                for (std::size_t j = 1; j < xs.size(); ++j)
                    if (xs[j] != xs[0]) cons.push_back({{xs[0], xs[j]}, 0});
                poly.add(af.a, xs[0], -1);
                break;
            case S::All:
            case S::Even:
            case S::Odd: {
                if (af.support != S::All) {
                    Constraint c;
                    for (int x : xs) {
                        if (c.vars.count(x))
                            c.vars.erase(x);
                        else
                            c.vars.insert(x);
                    }
                    c.rhs = af.support == S::Odd ? 1 : 0;
                    cons.push_back(c);
                }
                for (std::size_t j = 0; j < xs.size(); ++j) {
                    poly.add(af.a, xs[j], -1);
                    for (std::size_t l = j + 1; l < xs.size(); ++l) poly.add(af.c, xs[j], xs[l]);
                }
                break;
            }
        }
    }

    std::set<int> alive;
    for (int e = 0; e < m; ++e) alive.insert(e);

    // Solves one constraint for a pivot and substitutes it everywhere; false on 0 = 1.
    auto apply = [&](Constraint c, std::vector<Constraint>& rest) -> bool {
        if (c.vars.empty()) return c.rhs == 0;
        int p = *c.vars.begin();
        std::vector<int> terms;
        for (int u : c.vars)
            if (u != p) terms.push_back(u);
        if (c.rhs) terms.push_back(-1);
        poly = substitute(poly, p, terms);
        for (auto& r : rest) {
            if (!r.vars.count(p)) continue;
            r.vars.erase(p);
            for (int u : c.vars) {
                if (u == p) continue;
                if (r.vars.count(u))
                    r.vars.erase(u);
                else
                    r.vars.insert(u);
            }
            r.rhs ^= c.rhs;
        }
        alive.erase(p);
        return true;
    };

    while (!cons.empty()) {
        Constraint c = cons.back();
        cons.pop_back();
        if (!apply(c, cons)) return 0;
    }

    Alg total = lambda;
    while (!alive.empty()) {
        int y = *alive.begin();
        alive.erase(y);
        int ly = poly.lin.count(y) ? poly.lin[y] : 0;
        std::vector<int> nb;
        Poly rest;
        rest.c0 = poly.c0;
        for (const auto& [u, coef] : poly.lin)
            if (u != y) rest.lin[u] = coef;
        for (const auto& [key, coef] : poly.quad) {
            if (key.first == y || key.second == y) {
                if (coef != 2) throw RepresentationError("odd cross term in affine form");
                nb.push_back(key.first == y ? key.second : key.first);
            } else {
                rest.quad[key] = coef;
            }
        }
        poly = rest;
        if (nb.empty()) {
            total *= Alg(1) + ipow(ly);
        } else if (ly % 2 == 0) {
            total *= 2;
            Constraint c;
            for (int u : nb) c.vars.insert(u);
            c.rhs = ly == 2 ? 1 : 0;
            std::vector<Constraint> none;
            if (!apply(c, none)) return 0;
        } else {
            total *= Alg(1) + ipow(ly);
            int k = 4 - ly;
            for (std::size_t i = 0; i < nb.size(); ++i) {
                poly.add(k, nb[i], -1);
                for (std::size_t j = i + 1; j < nb.size(); ++j) poly.add(-2 * k, nb[i], nb[j]);
            }
        }
    }
    return total * ipow(poly.c0);
}

}  // namespace holant
