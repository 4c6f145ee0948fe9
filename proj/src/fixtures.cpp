#include "holant/fixtures.hpp"

#include "holant/classify.hpp"
#include "holant/gadgets.hpp"
#include "holant/solvers.hpp"

#include <functional>
#include <sstream>

namespace holant {

namespace {

Alg w() { return Alg::zeta(); }
Alg I() { return Alg::i(); }

Sig repeat_d(Sig f, const Sig& g, int times) {
    for (int t = 0; t < times; ++t) f = derivative(f, g);
    return f;
}

Sig gen_eq_k(const Alg& top, int n) {
    std::vector<Alg> e(n + 1, Alg(0));
    e[0] = 1;
    e[n] = top;
    return Sig(e);
}

Sig scaled_unary_power(const Alg& c, const Vec2& u, int n) { return tensor_power(u, n).scaled(c); }

/// Collects (name, ok, detail) rows; a check that throws counts as a failure.
struct Collector {
    std::string group;
    std::vector<FixtureResult> out;

    void check(const std::string& name, const std::function<std::string()>& body) {
        FixtureResult r{group, name, false, ""};
        try {
            r.detail = body();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(r);
    }
};

std::string expect_sig(const Sig& got, const Sig& want) {
    if (got == want) return "";
    return "got " + got.to_string() + ", expected " + want.to_string();
}

std::string expect_true(bool ok, const std::string& what) { return ok ? "" : what; }

std::string expect_gate(const PlanarGrid& g, const Sig& want) {
    GateResult r = gate_signature(g);
    if (!r.symmetric) return "gate is not symmetric";
    return expect_sig(*r.symmetric, want);
}

std::string verdict_text(const SetVerdict& v) {
    return std::string(v.tractable ? "Tractable" : "PHard") + (v.case_id.empty() ? "" : " (" + v.case_id + ")");
}

std::string expect_verdict(const SetVerdict& v, bool tractable, const std::string& case_id = "") {
    if (v.tractable != tractable || (!case_id.empty() && v.case_id != case_id))
        return "got " + verdict_text(v) + ", expected " + (tractable ? "Tractable" : "PHard") +
               (case_id.empty() ? "" : " (" + case_id + ")");
    return "";
}

Sig z_of(const Sig& f) { return transform(Transform2x2::Z(), f); }

const std::vector<Alg>& sample_values() {
    static const std::vector<Alg> v{Alg(2), Alg(-3), w(), Alg(1) + I(), Alg::rational(1, 2) - w().pow(3)};
    return v;
}

// f_k = u^k (n - 2k)
Sig weighted_line(const Alg& u, int n) {
    std::vector<Alg> e;
    for (int k = 0; k <= n; ++k) e.push_back(u.pow(k) * Alg(n - 2 * k));
    return Sig(e);
}

}  // namespace

std::vector<FixtureResult> calculus_fixtures(int max_arity) {
    Collector c{"calculus", {}};
    c.check("d[1,0,1,0,1] = [2,0,2]", [] { return expect_sig(self_loop(Sig{1, 0, 1, 0, 1}), Sig{2, 0, 2}); });
    c.check("d_[0,1,0] [0,1,0,0,0] = [2,0,0]",
            [] { return expect_sig(derivative(Sig{0, 1, 0, 0, 0}, Sig{0, 1, 0}), Sig{2, 0, 0}); });
    c.check("d^k_[1,x] (=_2k) = [1,0,...,0,x^k]", [&] {
        for (const Alg& x : sample_values())
            for (int k = 1; 2 * k <= max_arity; ++k) {
                auto r = expect_sig(repeat_d(eq_sig(2 * k), Sig{1, x}, k), gen_eq_k(x.pow(k), k));
                if (!r.empty()) return "k=" + std::to_string(k) + ": " + r;
            }
        return std::string();
    });
    c.check("unary derivative of a tensor power", [&] {
        for (const Alg& s : sample_values())
            for (const Alg& t : {Alg(1), I(), Alg(3)})
                for (const Alg& a : {Alg(1), Alg(-2)})
                    for (const Alg& b : {Alg(1), w()})
                        for (int n = 2; n <= max_arity; ++n)
                            for (int k = 1; k < n; ++k) {
                                Sig f = tensor_power({s, t}, n);
                                auto r = expect_sig(repeat_d(f, Sig{a, b}, k),
                                                    scaled_unary_power((a * s + b * t).pow(k), {s, t}, n - k));
                                if (!r.empty()) return r;
                            }
        return std::string();
    });
    c.check("binary derivative of a tensor power", [&] {
        for (const Alg& s : sample_values())
            for (const Alg& t : {Alg(1), I(), Alg(3)})
                for (const Sig& g : {Sig{1, 0, 1}, Sig{1, 2, 3}, Sig{0, w(), 1}})
                    for (int n = 3; n <= max_arity; ++n)
                        for (int k = 1; 2 * k < n; ++k) {
                            Alg q = g[0] * s * s + Alg(2) * g[1] * s * t + g[2] * t * t;
                            auto r = expect_sig(repeat_d(tensor_power({s, t}, n), g, k),
                                                scaled_unary_power(q.pow(k), {s, t}, n - 2 * k));
                            if (!r.empty()) return r;
                        }
        return std::string();
    });
    c.check("=4 derivative of a tensor power", [&] {
        for (const Alg& s : sample_values())
            for (const Alg& t : {Alg(1), I(), Alg(3)})
                for (int n = 5; n <= max_arity; ++n)
                    for (int k = 1; 4 * k < n; ++k) {
                        auto r = expect_sig(repeat_d(tensor_power({s, t}, n), eq_sig(4), k),
                                            scaled_unary_power((s.pow(4) + t.pow(4)).pow(k), {s, t}, n - 4 * k));
                        if (!r.empty()) return r;
                    }
        return std::string();
    });
    c.check("d_g (=_n) = [g_0,0,...,0,g_m]", [&] {
        for (const Sig& g : {Sig{2, 5}, Sig{1, 7, 3}, Sig{w(), 0, 1, I()}, Sig{1, 1, 1, 1, 4}})
            for (int n = g.arity() + 1; n <= max_arity; ++n) {
                std::vector<Alg> e(n - g.arity() + 1, Alg(0));
                e.front() = g[0];
                e.back() = g[g.arity()];
                auto r = expect_sig(derivative(eq_sig(n), g), Sig(e));
                if (!r.empty()) return "n=" + std::to_string(n) + ": " + r;
            }
        return std::string();
    });
    for (int sgn : {1, -1}) {
        std::string tag = sgn > 0 ? "+" : "-";
        Alg u(sgn);
        c.check("f_k = (" + tag + "1)^k (n-2k): d and d_=4 keep the form", [&] {
            for (int n = 3; n <= max_arity; ++n) {
                auto r = expect_sig(self_loop(weighted_line(u, n)), weighted_line(u, n - 2).scaled(2));
                if (!r.empty()) return "d, n=" + std::to_string(n) + ": " + r;
                if (n > 4) {
                    r = expect_sig(derivative(weighted_line(u, n), eq_sig(4)), weighted_line(u, n - 4).scaled(2));
                    if (!r.empty()) return "d_=4, n=" + std::to_string(n) + ": " + r;
                }
            }
            return std::string();
        });
        c.check("f_k = (" + tag + "1)^k (n-2k): iterated derivatives", [&] {
            for (int n = 1; n <= max_arity; n += 2) {
                Sig want = Sig{1, -u}.scaled(Alg(2).pow((n - 1) / 2));
                auto r = expect_sig(repeat_d(weighted_line(u, n), Sig{1, 0, 1}, (n - 1) / 2), want);
                if (!r.empty()) return "odd n=" + std::to_string(n) + ": " + r;
                if (n % 4 == 1) {
                    r = expect_sig(repeat_d(weighted_line(u, n), eq_sig(4), (n - 1) / 4),
                                   Sig{1, -u}.scaled(Alg(2).pow((n - 1) / 4)));
                } else {
                    r = expect_sig(self_loop(repeat_d(weighted_line(u, n), eq_sig(4), (n - 3) / 4)),
                                   Sig{1, -u}.scaled(Alg(2).pow((n + 1) / 4)));
                }
                if (!r.empty()) return "n=" + std::to_string(n) + ": " + r;
            }
            return std::string();
        });
        Alg ui = sgn > 0 ? I() : -I();
        c.check("f_k = (" + tag + "i)^k (n-2k): derivatives", [&] {
            for (int n = 3; n <= max_arity; ++n) {
                auto r = expect_sig(self_loop(weighted_line(ui, n)), tensor_power({Alg(1), ui}, n - 2).scaled(4));
                if (!r.empty()) return "d, n=" + std::to_string(n) + ": " + r;
                if (n > 4) {
                    r = expect_sig(derivative(weighted_line(ui, n), eq_sig(4)), weighted_line(ui, n - 4).scaled(2));
                    if (!r.empty()) return "d_=4, n=" + std::to_string(n) + ": " + r;
                }
            }
            for (int n = 1; n <= max_arity; n += 2) {
                std::string r;
                if (n % 4 == 1)
                    r = expect_sig(repeat_d(weighted_line(ui, n), eq_sig(4), (n - 1) / 4),
                                   Sig{1, -ui}.scaled(Alg(2).pow((n - 1) / 4)));
                else
                    r = expect_sig(self_loop(repeat_d(weighted_line(ui, n), eq_sig(4), (n - 3) / 4)),
                                   Sig{1, ui}.scaled(Alg(2).pow((n + 5) / 4)));
                if (!r.empty()) return "n=" + std::to_string(n) + ": " + r;
            }
            return std::string();
        });
    }
    return c.out;
}

std::vector<FixtureResult> gadget_fixtures() {
    Collector c{"gadget", {}};
    c.check("triangle of ExactOne_3 = [0,1,0,1]",
            [] { return expect_gate(triangle_gadget(exact_one(3)), Sig{0, 1, 0, 1}); });
    c.check("planar tetrahedron of ExactOne_4 = [0,2,0,1,0]",
            [] { return expect_gate(tetrahedron_gadget(exact_one(4)), Sig{0, 2, 0, 1, 0}); });
    for (const Alg& a : sample_values())
        c.check("chain with [1,0,0,0," + a.to_string() + "]", [a] {
            for (int k = 1; k <= 4; ++k) {
                auto r = expect_gate(chain_gadget(gen_eq(1, a, 4), Sig{1, 0, a}, k), gen_eq_k(a.pow(k), 2 * k));
                if (!r.empty()) return "k=" + std::to_string(k) + ": " + r;
            }
            return std::string();
        });
    for (int r = 0; r < 4; ++r)
        c.check("double-edge chain with [1,0,0,0,i^" + std::to_string(r) + "] = (=4)",
                [r] { return expect_gate(double_edge_chain_gadget(gen_eq(1, I().pow(r), 4), 4), eq_sig(4)); });
    return c.out;
}

std::vector<FixtureResult> verdict_fixtures() {
    Collector c{"verdict", {}};
    const Alg b(2);
    const Alg alpha = w();
    const Sig adag{1, alpha, -alpha * alpha};
    c.check("[1,b,1] in Mhat, not in P, A, Adagger", [&] {
        Sig f{1, b, 1};
        return expect_true(in_Mhat(f) && !in_P(f) && !in_A(f) && !in_Adagger(f), "membership mismatch");
    });
    c.check("[1,b,-1] in MhatDagger, not in Mhat", [&] {
        Sig f{1, b, -1};
        return expect_true(in_MhatDagger(f) && !in_Mhat(f), "membership mismatch");
    });
    c.check("[1,a,-a^2] in Adagger, not in A",
            [&] { return expect_true(in_Adagger(adag) && !in_A(adag), "membership mismatch"); });
    c.check("[1,0,0,5] in P, not in A",
            [] { return expect_true(in_P(Sig{1, 0, 0, 5}) && !in_A(Sig{1, 0, 0, 5}), "membership mismatch"); });
    c.check("[1,0,3,0,9] is a matchgate", [] { return expect_true(in_matchgate(Sig{1, 0, 3, 0, 9}), "not a matchgate"); });
    c.check("Z[x,1,0,...,0] in Vplus, not in M4plus", [] {
        for (int n = 3; n <= 6; ++n) {
            std::vector<Alg> e(n + 1, Alg(0));
            e[0] = 3;
            e[1] = 1;
            Sig f = z_of(Sig(e));
            if (!in_vanishing(f).plus || in_M4(f).plus) return "n=" + std::to_string(n);
        }
        return std::string();
    });
    c.check("ExactOne_5 in M3 with H = I", [] {
        auto r = in_transformable_family(exact_one(5));
        if (!r.m3.member) return std::string("not in M3");
        if (r.m3.witness && !r.m3.witness->verify(exact_one(5))) return std::string("witness does not verify");
        return std::string();
    });
    c.check("[1,a]^4 + i[1,-a]^4 in A3", [&] {
        Sig f = tensor_power({Alg(1), alpha}, 4) + tensor_power({Alg(1), -alpha}, 4).scaled(I());
        return expect_true(in_transformable_family(f).a3.member, "not in A3");
    });
    c.check("[1,0,0,5] recurrence type <0,1,0>", [] {
        auto r = recurrence_analysis(Sig{1, 0, 0, 5});
        if (r.types.size() != 1) return std::string("recurrence not unique");
        auto t = r.types[0];
        return expect_true(t[0].is_zero() && !t[1].is_zero() && t[2].is_zero(), "type is not <0,1,0>");
    });
    c.check("zero signature: rd = -1, vd = arity + 1", [] {
        auto d = vanishing_degrees(Sig{0, 0, 0, 0});
        return expect_true(d.rd_plus == -1 && d.vd_plus == 4 && d.rd_minus == -1 && d.vd_minus == 4, "degrees");
    });
    c.check("ExactOne_n decomposes as Sym([1,0];[0,1])", [] {
        for (int n = 3; n <= 8; ++n) {
            auto d = tensor_decompose(exact_one(n));
            if (d.kind != TensorDecomposition::Kind::DoubleRoot || !d.u[1].is_zero() || !d.v[0].is_zero() ||
                !(d.reexpand(n) == exact_one(n)))
                return "n=" + std::to_string(n);
        }
        return std::string();
    });
    c.check("row action: [1,0,1] Z = [0,2,0]",
            [] { return expect_sig(transform_row(Sig{1, 0, 1}, Transform2x2::Z()), Sig{0, 2, 0}); });

    c.check("binary-eq [1,2,4] tractable for any S", [] {
        for (const auto& S : std::vector<std::vector<int>>{{3}, {4}, {2, 5}, {6, 9}}) {
            auto r = expect_verdict(dichotomy_binary_eq(Sig{1, 2, 4}, S), true);
            if (!r.empty()) return r;
        }
        return std::string();
    });
    c.check("binary-eq [0,1,0] tractable for any S", [] {
        for (const auto& S : std::vector<std::vector<int>>{{3}, {4}, {2, 5}, {6, 9}}) {
            auto r = expect_verdict(dichotomy_binary_eq(Sig{0, 1, 0}, S), true);
            if (!r.empty()) return r;
        }
        return std::string();
    });
    c.check("plcsp2 {[1,b,1]} tractable", [&] { return expect_verdict(dichotomy_plcsp2({Sig{1, b, 1}}), true); });
    c.check("plcsp2 {[1,b,1], [1,a,-a^2]} hard",
            [&] { return expect_verdict(dichotomy_plcsp2({Sig{1, b, 1}, adag}), false); });
    c.check("ExactOne_7 tractable", [] { return expect_verdict(dichotomy_single(exact_one(7)), true); });
    c.check("Z[a,1,0,...,0,b] hard", [] {
        for (int n = 3; n <= 6; ++n) {
            std::vector<Alg> e(n + 1, Alg(0));
            e[0] = 2;
            e[1] = 1;
            e[n] = -3;
            auto r = expect_verdict(dichotomy_single(z_of(Sig(e))), false);
            if (!r.empty()) return "n=" + std::to_string(n) + ": " + r;
        }
        return std::string();
    });
    c.check("[v,1,0,0,0] hard", [] {
        for (const Alg& v : sample_values()) {
            auto r = expect_verdict(dichotomy_single(Sig{v, 1, 0, 0, 0}), false);
            if (!r.empty()) return r;
        }
        return std::string();
    });
    c.check("{Z(=5), Z(ExactOne_3)} tractable, case 7", [] {
        return expect_verdict(dichotomy_plholant_set({z_of(eq_sig(5)), z_of(exact_one(3))}), true, "case 7");
    });
    c.check("{Z(=4), Z(ExactOne_3)} hard",
            [] { return expect_verdict(dichotomy_plholant_set({z_of(eq_sig(4)), z_of(exact_one(3))}), false); });
    c.check("Vplus and Vminus of arity 5 outside M4 hard", [] {
        Sig f = z_of(Sig{3, 1, 0, 0, 0, 0});
        Sig g = z_of(Sig{0, 0, 0, 0, 1, 3});
        if (!in_vanishing(f).plus || !in_vanishing(g).minus) return std::string("fixture signatures misbuilt");
        return expect_verdict(dichotomy_plholant_set({f, g}), false);
    });
    c.check("hypergraph sizes {5,10} tractable", [] { return expect_verdict(hypergraph_verdict({5, 10}), true); });
    c.check("hypergraph sizes {1,2} tractable", [] { return expect_verdict(hypergraph_verdict({1, 2}), true); });
    c.check("hypergraph sizes {3,6} hard", [] { return expect_verdict(hypergraph_verdict({3, 6}), false); });
    return c.out;
}

namespace {

std::vector<FixtureResult> grid_and_solver_fixtures() {
    Collector c{"grid", {}};
    c.check("Vplus grid evaluates to 0", [] {
        Sig f = tensor_power({Alg(1), I()}, 3);
        PlanarGrid g;
        int l = g.add_label(f, "f");
        int a = g.add_vertex(l), b = g.add_vertex(l);
        g.connect(a, 0, b, 2);
        g.connect(a, 1, b, 1);
        g.connect(a, 2, b, 0);
        Alg v = holant_bruteforce(g);
        return expect_true(v.is_zero(), "value " + v.to_string());
    });
    c.check("orthogonal transform of all vertices keeps the value", [] {
        PlanarGrid g = tetrahedron_gadget(Sig{1, 2, 0, w(), 3});
        // Close the four dangling edges pairwise along the outer face.
        g.add_edge(g.dangling[0], g.dangling[1]);
        g.add_edge(g.dangling[2], g.dangling[3]);
        g.dangling.clear();
        Transform2x2 t{Alg::rational(3, 5), Alg::rational(4, 5), Alg::rational(-4, 5), Alg::rational(3, 5)};
        Alg before = holant_bruteforce(g), after = holant_bruteforce(transform_all(g, t));
        return expect_true(before == after, before.to_string() + " vs " + after.to_string());
    });

    Collector s{"solvers", {}};
    s.check("odd disequality cycle of equalities gives 0", [] {
        // Three =5 on a triangle through ≠2, each with its other three edges into one ExactOne_3.
        PlanarGrid g;
        int eq = g.add_label(eq_sig(5), "=5"), ne = g.add_label(neq2(), "!=2"), ex = g.add_label(exact_one(3), "E3");
        int e[3], x[3];
        for (int j = 0; j < 3; ++j) {
            e[j] = g.add_vertex(eq, 'R');
            x[j] = g.add_vertex(ex, 'R');
        }
        auto link = [&](int u, int su, int v, int sv) {
            int n = g.add_vertex(ne, 'L');
            g.connect(u, su, n, 0);
            g.connect(n, 1, v, sv);
        };
        for (int j = 0; j < 3; ++j) link(e[j], 0, e[(j + 1) % 3], 4);
        for (int j = 0; j < 3; ++j)
            for (int t = 0; t < 3; ++t) link(e[j], 1 + t, x[j], 2 - t);
        Alg fast = eo_geneq_eval(EOInstance::from_grid(g)), brute = holant_bruteforce(g, 40);
        if (!fast.is_zero()) return "solver gives " + fast.to_string();
        return expect_true(brute.is_zero(), "brute force gives " + brute.to_string());
    });
    s.check("4-regular [0,0,1,0,0] beyond the cap is refused", [] {
        PlanarGrid g = antiprism_grid(Sig{0, 0, 1, 0, 0}, 7);
        try {
            evaluate_detailed(g, Method::Auto, 24);
        } catch (const TooLarge& e) {
            std::string msg = e.what();
            return expect_true(msg.find("PHard") != std::string::npos, "no hardness note: " + msg);
        }
        return std::string("no TooLarge raised");
    });
    s.check("hypergraph sizes {3}: PHard verdict with a brute-force count", [] {
        PlanarHypergraph h;
        h.vertices = {0, 1, 2};
        h.hyperedges = {{0, {0, 1, 2}}};
        h.rotation = {{"h0", {0, 1, 2}}, {"v0", {0}}, {"v1", {1}}, {"v2", {2}}};
        auto r = hypergraph_pm(h);
        if (r.verdict.tractable) return std::string("verdict is tractable");
        if (!r.value || !(*r.value == Alg(1))) return std::string("count missing or wrong");
        return std::string();
    });
    for (auto& r : s.out) c.out.push_back(r);
    return c.out;
}

}  // namespace

std::vector<FixtureResult> run_fixture_suite() {
    std::vector<FixtureResult> all;
    for (auto part : {calculus_fixtures(10), gadget_fixtures(), verdict_fixtures(), grid_and_solver_fixtures()})
        for (auto& r : part) all.push_back(r);
    return all;
}

}  // namespace holant
