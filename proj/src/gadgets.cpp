#include "holant/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holant {

int Drawing::add_vertex(int label, double x, double y) {
    pos.emplace_back(x, y);
    label_of.push_back(label);
    return static_cast<int>(pos.size()) - 1;
}

PlanarGrid Drawing::build() const {
    const int n = static_cast<int>(pos.size());
    auto angle = [&](int v, std::pair<double, double> p) {
        return std::atan2(p.second - pos[v].second, p.first - pos[v].first);
    };
    // Per vertex: (angle, item); item >= 0 is edge end 2e / 2e+1, item < 0 is dangling -1-j.
    std::vector<std::vector<std::pair<double, int>>> around(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        around[u].push_back({angle(u, pos[v]), static_cast<int>(2 * e)});
        around[v].push_back({angle(v, pos[u]), static_cast<int>(2 * e + 1)});
    }
    for (std::size_t j = 0; j < dangling.size(); ++j) {
        auto [v, p] = dangling[j];
        around[v].push_back({angle(v, p), -1 - static_cast<int>(j)});
    }
    PlanarGrid g;
    for (const auto& l : labels) g.add_label(l);
    std::vector<int> end_half(2 * edges.size()), dangling_half(dangling.size());
    int next = 0;
    for (int v = 0; v < n; ++v) {
        std::sort(around[v].begin(), around[v].end());
        std::vector<int> rot;
        for (const auto& [a, item] : around[v]) {
            (void)a;
            if (item >= 0)
                end_half[item] = next;
            else
                dangling_half[-1 - item] = next;
            rot.push_back(next++);
        }
        int idx = g.add_vertex_with_rotation(label_of[v], rot);
        g.vertices[idx].id = v;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) g.add_edge(end_half[2 * e], end_half[2 * e + 1]);
    g.dangling = dangling_half;
    return g;
}

PlanarGrid triangle_gadget(const Sig& f) {
    Drawing d;
    d.labels = {f};
    const double s = std::sqrt(3.0);
    int a = d.add_vertex(0, 0, s), b = d.add_vertex(0, -1, 0), c = d.add_vertex(0, 1, 0);
    d.edges = {{a, b}, {b, c}, {c, a}};
    d.dangling = {{a, {0, s + 1}}, {b, {-2, -1}}, {c, {2, -1}}};
    return d.build();
}

PlanarGrid tetrahedron_gadget(const Sig& f) {
    Drawing d;
    d.labels = {f};
    int l = d.add_vertex(0, 0, 0), c = d.add_vertex(0, 1, 0), t = d.add_vertex(0, 1, 1), b = d.add_vertex(0, 1, -1),
        r = d.add_vertex(0, 2, 0);
    d.edges = {{l, c}, {l, t}, {l, b}, {c, t}, {c, b}, {c, r}, {t, r}, {b, r}};
    // The centre vertex is internal; it needs no dangling edge.
    d.dangling = {{l, {-1, 0}}, {b, {1, -2}}, {r, {3, 0}}, {t, {1, 2}}};
    return d.build();
}

PlanarGrid chain_gadget(const Sig& circle, const Sig& end, int k) {
    Drawing d;
    d.labels = {end, eq_sig(2), circle};
    int tri = d.add_vertex(0, 0, 0);
    std::vector<std::pair<int, std::pair<double, double>>> up, down;
    int prev = tri;
    for (int j = 1; j < k; ++j) {
        int sq = d.add_vertex(1, 2.0 * j - 1, 0);
        int ci = d.add_vertex(2, 2.0 * j, 0);
        d.edges.push_back({prev, sq});
        d.edges.push_back({sq, ci});
        up.push_back({ci, {2.0 * j, 1}});
        down.push_back({ci, {2.0 * j, -1}});
        prev = ci;
    }
    d.dangling.push_back({tri, {-1, 0}});
    for (const auto& x : down) d.dangling.push_back(x);
    d.dangling.push_back({prev, {2.0 * k + 1, 0}});
    for (auto it = up.rbegin(); it != up.rend(); ++it) d.dangling.push_back(*it);
    return d.build();
}

PlanarGrid double_edge_chain_gadget(const Sig& circle, int count) {
    Drawing d;
    d.labels = {circle, Sig{1, 0, 1}};
    std::vector<int> c;
    for (int j = 0; j < count; ++j) c.push_back(d.add_vertex(0, 2.0 * j, 0));
    for (int j = 0; j + 1 < count; ++j) {
        int top = d.add_vertex(1, 2.0 * j + 1, 0.5), bot = d.add_vertex(1, 2.0 * j + 1, -0.5);
        d.edges.push_back({c[j], top});
        d.edges.push_back({top, c[j + 1]});
        d.edges.push_back({c[j], bot});
        d.edges.push_back({bot, c[j + 1]});
    }
    double xl = -1, xr = 2.0 * count - 1;
    d.dangling = {{c.front(), {xl, 1}}, {c.front(), {xl, -1}}, {c.back(), {xr, -1}}, {c.back(), {xr, 1}}};
    return d.build();
}

PlanarGrid antiprism_grid(const Sig& f, int n) {
    Drawing d;
    d.labels = {f};
    const double pi = std::numbers::pi;
    std::vector<int> outer, inner;
    for (int i = 0; i < n; ++i) outer.push_back(d.add_vertex(0, 2 * std::cos(2 * pi * i / n), 2 * std::sin(2 * pi * i / n)));
    for (int i = 0; i < n; ++i)
        inner.push_back(d.add_vertex(0, std::cos(2 * pi * (i + 0.5) / n), std::sin(2 * pi * (i + 0.5) / n)));
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        d.edges.push_back({outer[i], outer[j]});
        d.edges.push_back({inner[i], inner[j]});
        d.edges.push_back({inner[i], outer[i]});
        d.edges.push_back({inner[i], outer[j]});
    }
    return d.build();
}

}  // namespace holant
