#include "holant/classify.hpp"
#include "holant/grid.hpp"
#include "holant/io.hpp"
#include "holant/solvers.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace holant;

namespace {

struct Options {
    std::string input;
    std::string framework = "plholant";
    std::string method = "auto";
    std::optional<std::size_t> cap;
    std::string matrix;
    std::vector<int> arities;
};

int emit(const Json& j, int code) {
    std::cout << j.dump(2) << "\n";
    return code;
}

int error(const std::string& kind, const std::string& message, int code, const std::string& where = "") {
    Json e{{"kind", kind}, {"message", message}};
    if (!where.empty()) e["where"] = where;
    return emit(Json{{"error", e}}, code);
}

std::size_t cap_of(const Options& o) { return o.cap ? *o.cap : default_cap(); }

Json witness_json(const Witness& w) {
    return Json{{"transform", matrix_to_json(w.t)}, {"canonical", sig_to_json(w.canonical)}, {"scale", scalar_to_json(w.scale)}};
}

Json signature_report(const Sig& f) {
    Json classes = Json::object();
    for (const auto& row : class_table(f)) classes[class_name(row.cls)] = row.member;
    Json j{{"signature", sig_to_json(f)}, {"classes", classes}};
    if (f.is_degenerate()) return j;
    FamilyReport r = in_transformable_family(f);
    Json wit = Json::object();
    const std::vector<std::pair<const char*, const Membership*>> fams{
        {"P1", &r.p1}, {"P2", &r.p2}, {"A1", &r.a1}, {"A3", &r.a3}, {"M1", &r.m1},
        {"M2", &r.m2}, {"M3", &r.m3}, {"M4plus", &r.m4plus}, {"M4minus", &r.m4minus}};
    for (const auto& [name, m] : fams)
        if (m->member && m->witness) wit[name] = witness_json(*m->witness);
    if (!wit.empty()) j["witnesses"] = wit;
    return j;
}

/// Signatures from a list file, a single signature, or a grid file.
std::vector<Sig> signatures_of(const Json& j) {
    std::vector<Sig> F;
    if (j.is_array()) {
        if (!j.empty() && j[0].is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i) F.push_back(sig_from_json(j[i], "/" + std::to_string(i)));
        } else {
            F.push_back(sig_from_json(j, ""));
        }
        return F;
    }
    if (j.is_object() && j.contains("signatures")) {
        const Json& s = j["signatures"];
        if (s.is_array()) return signatures_of(s);
        if (s.is_object()) {
            PlanarGrid g = grid_from_json(j);
            for (std::size_t l = 0; l < g.labels.size(); ++l) {
                if (!g.labels[l].is_symmetric())
                    throw InputError("classification needs symmetric signatures", "/signatures/" + g.label_names[l]);
                F.push_back(g.labels[l].sym());
            }
            return F;
        }
    }
    throw InputError("expected a signature, a list of signatures, or a grid", "");
}

std::vector<int> hyperedge_sizes(const Json& j) {
    PlanarHypergraph h = hypergraph_from_json(j);
    std::vector<int> sizes;
    for (const auto& e : h.hyperedges) sizes.push_back(static_cast<int>(e.members.size()));
    return sizes;
}

int cmd_classify(const Options& o) {
    Json in = read_json_file(o.input);
    Json out;
    if (o.framework == "hpm") {
        auto sizes = in.is_object() && in.contains("hyperedges") ? hyperedge_sizes(in) : std::vector<int>{};
        if (in.is_object() && in.contains("sizes")) {
            sizes.clear();
            for (std::size_t i = 0; i < in["sizes"].size(); ++i) sizes.push_back(in["sizes"][i].get<int>());
        }
        if (sizes.empty()) throw InputError("need a hypergraph or a \"sizes\" list", "");
        out["sizes"] = sizes;
        out["verdict"] = cli::verdict_to_json(hypergraph_verdict(sizes));
        return emit(out, 0);
    }
    std::vector<Sig> F = signatures_of(in);
    Json per = Json::array();
    for (const auto& f : F) per.push_back(signature_report(f));
    out["signatures"] = per;
    SetVerdict v;
    if (o.framework == "plholant") {
        v = dichotomy_plholant_set(F);
    } else if (o.framework == "plcsp") {
        v = dichotomy_plcsp(F);
    } else if (o.framework == "plcsp2") {
        v = dichotomy_plcsp2(F);
    } else {
        std::vector<int> S = o.arities;
        if (S.empty() && in.is_object() && in.contains("S")) {
            for (std::size_t i = 0; i < in["S"].size(); ++i) S.push_back(in["S"][i].get<int>());
        }
        if (F.size() != 1) throw InputError("binary-eq takes exactly one binary signature", "");
        if (S.empty()) throw InputError("binary-eq needs equality arities (--arities or \"S\")", "");
        v = dichotomy_binary_eq(F[0], S);
    }
    out["verdict"] = cli::verdict_to_json(v);
    return emit(out, 0);
}

int cmd_eval(const Options& o) {
    PlanarGrid g = grid_from_json(read_json_file(o.input));
    EvalResult r = evaluate_detailed(g, parse_method(o.method), cap_of(o));
    Json out{{"value", scalar_to_json(r.value)}, {"route", r.route}};
    if (!r.note.empty()) out["note"] = r.note;
    if (r.verdict) out["verdict"] = cli::verdict_to_json(*r.verdict);
    return emit(out, 0);
}

int cmd_gate(const Options& o) {
    PlanarGrid g = grid_from_json(read_json_file(o.input));
    GateResult r = gate_signature(g, cap_of(o));
    Json out;
    out["arity"] = r.general.arity();
    out["symmetric"] = r.symmetric.has_value();
    if (r.symmetric) out["signature"] = sig_to_json(*r.symmetric);
    out["general"] = label_to_json(Label(r.general));
    return emit(out, 0);
}

int cmd_transform(const Options& o) {
    Transform2x2 t = parse_matrix(o.matrix);
    if (!t.invertible()) throw InputError("matrix is singular", "--matrix");
    Json in = read_json_file(o.input);
    Json out;
    out["matrix"] = matrix_to_json(t);
    if (in.is_array()) {
        out["signature"] = sig_to_json(transform(t, sig_from_json(in, "")));
        return emit(out, 0);
    }
    PlanarGrid g = grid_from_json(in);
    if (g.bipartite_tagged()) {
        out["mode"] = "bipartite";
        out["grid"] = grid_to_json(holographic_transform_bipartite(g, t));
    } else {
        out["mode"] = "all vertices";
        out["orthogonal"] = t.orthogonal();
        out["grid"] = grid_to_json(transform_all(g, t));
    }
    return emit(out, 0);
}

int cmd_pm(const Options& o) {
    WeightedPlanarGraph g = weighted_graph_from_json(read_json_file(o.input));
    Json out;
    if (o.method == "brute") {
        if (g.edges.size() > cap_of(o)) throw TooLarge("matching enumeration", g.edges.size(), cap_of(o));
        out["value"] = scalar_to_json(pm_bruteforce(g));
        out["method"] = "brute";
    } else if (o.method == "auto" || o.method == "fkt") {
        out["value"] = scalar_to_json(fkt_count_pm(g));
        out["method"] = "fkt";
    } else {
        throw InputError("pm supports --method auto, fkt or brute", "--method");
    }
    return emit(out, 0);
}

int cmd_hpm(const Options& o) {
    PlanarHypergraph h = hypergraph_from_json(read_json_file(o.input));
    HypergraphResult r = hypergraph_pm(h, cap_of(o));
    Json out;
    out["verdict"] = cli::verdict_to_json(r.verdict);
    out["value"] = r.value ? Json(scalar_to_json(*r.value)) : Json(nullptr);
    out["method"] = r.method;
    return emit(out, r.value ? 0 : 1);
}

int cmd_verify() {
    bool ok = false;
    Json out = cli::verify_report(ok);
    return emit(out, ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Holant evaluation and classification"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "input JSON file")->required(); };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option_function<std::size_t>(
            "--cap", [&](const std::size_t& c) { o.cap = c; }, "brute-force edge cap (default 24 or HOLANT_CAP)");
    };

    auto* classify = app.add_subcommand("classify", "classes of each signature and the framework verdict");
    add_input(classify);
    classify->add_option("--framework", o.framework)
        ->check(CLI::IsMember({"plcsp", "plcsp2", "plholant", "binary-eq", "hpm"}));
    classify->add_option("--arities", o.arities, "equality arities S for binary-eq")->delimiter(',');

    auto* eval = app.add_subcommand("eval", "exact Holant value of a grid");
    add_input(eval);
    eval->add_option("--method", o.method)
        ->check(CLI::IsMember({"auto", "brute", "product", "affine", "vanishing", "eo", "fkt"}));
    add_cap(eval);

    auto* gate = app.add_subcommand("gate", "signature of a gate with dangling edges");
    add_input(gate);
    add_cap(gate);

    auto* tr = app.add_subcommand("transform", "holographic transformation of a signature or grid");
    add_input(tr);
    tr->add_option("--matrix", o.matrix, "\"a,b;c,d\"")->required();

    auto* pm = app.add_subcommand("pm", "weighted perfect matchings of a planar graph");
    add_input(pm);
    pm->add_option("--method", o.method)->check(CLI::IsMember({"auto", "fkt", "brute"}));
    add_cap(pm);

    auto* hpm = app.add_subcommand("hpm", "perfect matchings of a planar hypergraph");
    add_input(hpm);
    add_cap(hpm);

    auto* verify = app.add_subcommand("verify", "run the built-in fixture suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return error("usage", e.what(), 2);
    }

    try {
        if (*classify) return cmd_classify(o);
        if (*eval) return cmd_eval(o);
        if (*gate) return cmd_gate(o);
        if (*tr) return cmd_transform(o);
        if (*pm) return cmd_pm(o);
        if (*hpm) return cmd_hpm(o);
        if (*verify) return cmd_verify();
    } catch (const InputError& e) {
        return error("input", e.what(), 2, e.where());
    } catch (const TooLarge& e) {
        return error("too_large", e.what(), 1);
    } catch (const EmbeddingError& e) {
        return error("embedding", e.what(), 2);
    } catch (const StructureError& e) {
        return error("structure", e.what(), 2);
    } catch (const OrderError& e) {
        return error("order", e.what(), 2);
    } catch (const NotBipartite& e) {
        return error("not_bipartite", e.what(), 2);
    } catch (const ClassError& e) {
        return error("class", e.what(), 2);
    } catch (const GcdError& e) {
        return error("gcd", e.what(), 2);
    } catch (const RepresentationError& e) {
        return error("representation", e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return error("invalid", e.what(), 2);
    } catch (const std::domain_error& e) {
        return error("domain", e.what(), 2);
    } catch (const std::exception& e) {
        return error("internal", e.what(), 1);
    }
    return 2;
}
