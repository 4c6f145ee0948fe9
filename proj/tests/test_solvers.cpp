#include "support.hpp"

#include "holant/gadgets.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace holant;
using namespace holant::ts;

namespace {

std::vector<Alg> weights_for(const PlanarMap& m, Rng& rng, bool weighted) {
    std::vector<Alg> w;
    for (int e = 0; e < m.edges(); ++e) w.push_back(weighted ? random_nonzero(rng) : Alg(1));
    return w;
}

bool all_labels(const PlanarGrid& g, const std::function<bool(const Sig&)>& pred) {
    for (const auto& l : g.labels)
        if (!l.is_symmetric() || !pred(l.sym())) return false;
    return true;
}

}  // namespace

TEST(Solvers, FktMatchesEnumeration) {
    Rng rng(51);
    for (int t = 0; t < 120; ++t) {
        int V = 2 * uniform(rng, 1, 5);
        int E = uniform(rng, V - 1, std::min(18, 3 * V - 6 > V - 1 ? 3 * V - 6 : V - 1));
        PlanarMap m = random_planar_map(rng, V, E, false, false);
        auto w = weights_for(m, rng, t % 2 == 1);
        WeightedPlanarGraph g = graph_from_map(m, w);
        Alg expect = matchings_by_enumeration(g);
        EXPECT_EQ(fkt_count_pm(g), expect);
        EXPECT_EQ(pm_bruteforce(g), expect);
        EXPECT_EQ(holant_bruteforce(matching_grid(m, w), 30), expect);
    }
}

TEST(Solvers, FktIgnoresEmbeddingChoice) {
    Rng rng(52);
    for (int t = 0; t < 40; ++t) {
        PlanarMap m = random_planar_map(rng, 8, 14, false, false);
        WeightedPlanarGraph g = graph_from_map(m, weights_for(m, rng, true));
        WeightedPlanarGraph mirror = g;
        for (auto& r : mirror.rotation) std::reverse(r.begin(), r.end());
        EXPECT_EQ(fkt_count_pm(mirror), fkt_count_pm(g));
    }
}

TEST(Solvers, FktKnownCounts) {
    WeightedPlanarGraph k4;
    k4.num_vertices = 4;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
    k4.rotation_from_coordinates({{0, 0}, {4, 0}, {2, 4}, {2, 1.5}});
    EXPECT_EQ(fkt_count_pm(k4), Alg(3));
    WeightedPlanarGraph g44 = grid_graph(4, 4);
    EXPECT_EQ(fkt_count_pm(g44), Alg(36));
    EXPECT_EQ(matchings_by_enumeration(g44), Alg(36));
    EXPECT_EQ(fkt_count_pm(grid_graph(3, 3)), Alg(0));
}

TEST(Solvers, FktRejectsNonPlanarRotation) {
    WeightedPlanarGraph g;
    g.num_vertices = 2;
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.rotation = {{0, 2, 4}, {1, 5, 3}};
    EXPECT_NO_THROW(fkt_count_pm(g));
    g.rotation = {{0, 2, 4}, {1, 3, 5}};
    EXPECT_THROW(fkt_count_pm(g), EmbeddingError);
}

TEST(Solvers, ProductMatchesBruteForce) {
    Rng rng(53);
    for (int t = 0; t < 120; ++t) {
        PlanarGrid g = random_grid(rng, 16, [&](int d) { return class_member(rng, TractableClass::P, d); });
        ASSERT_TRUE(all_labels(g, in_P));
        EXPECT_EQ(product_eval(g), holant_bruteforce(g, 30));
    }
}

TEST(Solvers, AffineMatchesBruteForce) {
    Rng rng(54);
    for (int t = 0; t < 120; ++t) {
        PlanarGrid g = random_grid(rng, 16, [&](int d) { return class_member(rng, TractableClass::A, d); });
        ASSERT_TRUE(all_labels(g, in_A));
        EXPECT_EQ(affine_eval(g), holant_bruteforce(g, 30));
    }
}

TEST(Solvers, VanishingGridsEvaluateToZero) {
    Rng rng(55);
    for (int t = 0; t < 120; ++t) {
        TractableClass c = t % 2 ? TractableClass::Vplus : TractableClass::Vminus;
        PlanarGrid g = random_grid(rng, 14, [&](int d) { return class_member(rng, c, d); });
        Alg brute = holant_bruteforce(g, 30);
        EXPECT_TRUE(brute.is_zero()) << brute;
        EXPECT_EQ(vanishing_eval(g), brute);
    }
}

TEST(Solvers, EqualityOracleMatchesBruteForce) {
    Rng rng(56);
    for (int t = 0; t < 150; ++t) {
        EOInstance inst = random_eo_instance(rng, {5, 9, t % 3 != 0, t % 2 == 0});
        EXPECT_EQ(eo_geneq_eval(inst), holant_bruteforce(inst.grid, 30));
    }
}

TEST(Solvers, TraceKeepsTheValue) {
    Rng rng(57);
    int events = 0, pins = 0;
    for (int t = 0; t < 60; ++t) {
        EOInstance inst = random_eo_instance(rng, {6, 10, true, true});
        Alg answer = holant_bruteforce(inst.grid, 30);
        Alg got = eo_geneq_eval(inst, [&](const EOTraceEvent& ev) {
            ++events;
            EXPECT_EQ(ev.scalar * holant_bruteforce(ev.residual, 30), answer) << ev.step;
            if (ev.step != "pin") return;
            auto support = support_assignments(ev.residual);
            for (auto [half, value] : ev.pins) {
                ++pins;
                int e = edge_of_half(ev.residual, half);
                ASSERT_GE(e, 0);
                for (const auto& x : support) EXPECT_EQ(x[e], value) << "pinned edge takes both values";
            }
        });
        EXPECT_EQ(got, answer);
    }
    EXPECT_GT(events, 0);
    EXPECT_GT(pins, 0);
}

TEST(Solvers, EBlocksHaveTwoComplementarySupports) {
    Rng rng(58);
    int blocks = 0;
    for (int t = 0; t < 60; ++t) {
        EOInstance inst = random_eo_instance(rng, {5, 9, false, false});
        auto support = support_assignments(inst.grid);
        for (const auto& b : find_eblocks(inst)) {
            if (b.trivial) continue;
            ++blocks;
            for (const auto& x : support) {
                std::set<int> flips;
                for (std::size_t j = 0; j < b.external.size(); ++j)
                    flips.insert(x[edge_of_half(inst.grid, b.external[j])] ^ int(b.minus[j]));
                EXPECT_LE(flips.size(), 1u);
            }
        }
    }
    EXPECT_GT(blocks, 0);
}

TEST(Solvers, SmallGcdIsRejected) {
    PlanarGrid g;
    int eq = g.add_label(eq_sig(3));
    int ln = g.add_label(Label(GeneralSignature(2, {0, 1, 1, 0})));
    g.add_vertex_with_rotation(eq, {0, 1, 2}, 'R');
    g.add_vertex_with_rotation(eq, {3, 4, 5}, 'R');
    int next = 6;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 5}, {1, 4}, {2, 3}}) {
        g.add_vertex_with_rotation(ln, {next, next + 1}, 'L');
        g.add_edge(a, next);
        g.add_edge(next + 1, b);
        next += 2;
    }
    EXPECT_THROW(EOInstance::from_grid(g), GcdError);
}

TEST(Solvers, HypergraphMatchesEnumeration) {
    Rng rng(59);
    int nonzero = 0;
    for (int t = 0; t < 60; ++t) {
        std::vector<int> sizes = t % 2 ? std::vector<int>{5} : std::vector<int>{5, 10};
        PlanarHypergraph h = random_hypergraph(rng, sizes, 18);
        HypergraphResult r = hypergraph_pm(h, 40);
        EXPECT_TRUE(r.verdict.tractable);
        ASSERT_TRUE(r.value.has_value());
        Alg expect = hyperedge_covers_by_enumeration(h);
        EXPECT_EQ(*r.value, expect);
        EXPECT_EQ(hypergraph_pm_bruteforce(h), expect);
        if (!expect.is_zero()) ++nonzero;
    }
    EXPECT_GT(nonzero, 20);
}

TEST(Solvers, HypergraphSmallGcdIsHard) {
    Rng rng(60);
    for (const auto& sizes : std::vector<std::vector<int>>{{3}, {4}, {3, 6}, {2, 3}}) {
        PlanarHypergraph h = random_hypergraph(rng, sizes, 12);
        HypergraphResult r = hypergraph_pm(h, 40);
        int g = 0, largest = 0;
        for (const auto& e : h.hyperedges) {
            g = std::gcd(g, static_cast<int>(e.members.size()));
            largest = std::max(largest, static_cast<int>(e.members.size()));
        }
        EXPECT_EQ(r.verdict.tractable, g >= 5 || largest <= 2);
        if (r.value) EXPECT_EQ(*r.value, hyperedge_covers_by_enumeration(h));
    }
}

TEST(Solvers, HypergraphWithSingletonsAndPairs) {
    PlanarHypergraph h;
    h.vertices = {0, 1};
    h.hyperedges = {{0, {0, 1}}, {1, {0}}, {2, {1}}};
    h.rotation = {{"h0", {0, 1}}, {"h1", {2}}, {"h2", {3}}, {"v0", {0, 2}}, {"v1", {3, 1}}};
    HypergraphResult one = hypergraph_pm(h, 40);
    ASSERT_TRUE(one.value.has_value());
    EXPECT_EQ(*one.value, Alg(2));
    Rng rng(62);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> sizes = t % 2 ? std::vector<int>{2} : std::vector<int>{1, 2};
        PlanarHypergraph r = random_hypergraph(rng, sizes, 14);
        HypergraphResult got = hypergraph_pm(r, 40);
        EXPECT_TRUE(got.verdict.tractable);
        ASSERT_TRUE(got.value.has_value());
        EXPECT_EQ(*got.value, hyperedge_covers_by_enumeration(r));
    }
}

TEST(Solvers, AutoRoutesAgreeWithBruteForce) {
    Rng rng(61);
    const TractableClass cs[] = {TractableClass::P, TractableClass::A, TractableClass::Vplus, TractableClass::Matchgate};
    for (int t = 0; t < 80; ++t) {
        TractableClass c = cs[t % 4];
        PlanarGrid g = random_grid(rng, 12, [&](int d) { return class_member(rng, c, d); });
        EvalResult r = evaluate_detailed(g, Method::Auto, 30);
        EXPECT_EQ(r.value, holant_bruteforce(g, 30)) << r.route;
    }
}

TEST(Solvers, HardInstanceBeyondCapIsRefused) {
    PlanarGrid g = antiprism_grid(Sig{0, 0, 1, 0, 0}, 7);
    try {
        evaluate_detailed(g, Method::Auto, 24);
        FAIL() << "expected TooLarge";
    } catch (const TooLarge& e) {
        EXPECT_NE(std::string(e.what()).find("PHard"), std::string::npos);
    }
}

TEST(Solvers, MethodNames) {
    for (Method m : {Method::Auto, Method::Brute, Method::Product, Method::Affine, Method::Vanishing, Method::EO,
                     Method::FKT})
        EXPECT_EQ(parse_method(method_name(m)), m);
    EXPECT_THROW(parse_method("magic"), std::invalid_argument);
}
