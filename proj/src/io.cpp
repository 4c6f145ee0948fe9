#include "holant/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace holant {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError("expected an object", where);
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key '") + key + "'", where);
    return *it;
}

const Json& array_member(const Json& j, const char* key, const std::string& where) {
    const Json& a = member(j, key, where);
    if (!a.is_array()) throw InputError("expected an array", at(where, key));
    return a;
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError("expected an integer", where);
    return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError("expected an array", where);
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], at(where, i)));
    return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path, "");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what(), "");
    }
}

Alg scalar_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Alg(j.get<long>());
    if (!j.is_string()) throw InputError("expected a scalar string", where);
    try {
        return Alg::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw InputError(e.what(), where);
    }
}

Json scalar_to_json(const Alg& x) { return x.to_string(); }

Sig sig_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw InputError("expected a nonempty array of scalars", where);
    std::vector<Alg> e;
    for (std::size_t i = 0; i < j.size(); ++i) e.push_back(scalar_from_json(j[i], at(where, i)));
    return Sig(std::move(e));
}

Json sig_to_json(const Sig& f) {
    Json a = Json::array();
    for (const auto& x : f.entries()) a.push_back(scalar_to_json(x));
    return a;
}

Label label_from_json(const Json& j, const std::string& where) {
    if (j.is_array()) return sig_from_json(j, where);
    int n = as_int(member(j, "arity", where), at(where, "arity"));
    const Json& vals = array_member(j, "values", where);
    if (n < 0 || n > 20 || vals.size() != (std::size_t{1} << n))
        throw InputError("general signature needs 2^arity values", at(where, "values"));
    std::vector<Alg> e;
    for (std::size_t i = 0; i < vals.size(); ++i) e.push_back(scalar_from_json(vals[i], at(at(where, "values"), i)));
    return GeneralSignature(n, std::move(e));
}

Json label_to_json(const Label& l) {
    if (l.is_symmetric()) return sig_to_json(l.sym());
    GeneralSignature g = l.general();
    Json vals = Json::array();
    for (const auto& x : g.entries()) vals.push_back(scalar_to_json(x));
    return Json{{"arity", g.arity()}, {"values", vals}};
}

PlanarGrid grid_from_json(const Json& j) {
    PlanarGrid g;
    std::map<std::string, int> label_index;
    const Json& sigs = member(j, "signatures", "");
    if (!sigs.is_object()) throw InputError("expected an object", "/signatures");
    for (const auto& [name, val] : sigs.items())
        label_index[name] = g.add_label(label_from_json(val, "/signatures/" + name), name);

    const Json& verts = array_member(j, "vertices", "");
    std::map<int, int> index_of_id;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::string w = at("/vertices", i);
        const Json& v = verts[i];
        int id = as_int(member(v, "id", w), at(w, "id"));
        const Json& s = member(v, "sig", w);
        if (!s.is_string() || !label_index.count(s.get<std::string>()))
            throw InputError("unknown signature name", at(w, "sig"));
        int idx = g.add_vertex_with_rotation(label_index[s.get<std::string>()],
                                             int_list(member(v, "rotation", w), at(w, "rotation")));
        g.vertices[idx].id = id;
        if (!index_of_id.emplace(id, idx).second) throw InputError("duplicate vertex id", at(w, "id"));
    }
    const Json& edges = array_member(j, "edges", "");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto e = int_list(edges[i], at("/edges", i));
        if (e.size() != 2) throw InputError("an edge has two half-edges", at("/edges", i));
        g.add_edge(e[0], e[1]);
    }
    if (j.contains("dangling")) g.dangling = int_list(j["dangling"], "/dangling");
    if (j.contains("side")) {
        const Json& side = j["side"];
        if (!side.is_object()) throw InputError("expected an object", "/side");
        for (const auto& [key, val] : side.items()) {
            std::string w = "/side/" + key;
            int id = 0;
            try {
                std::size_t pos = 0;
                id = std::stoi(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("side keys are vertex ids", w);
            }
            if (!index_of_id.count(id)) throw InputError("unknown vertex id", w);
            if (!val.is_string() || (val != "L" && val != "R")) throw InputError("side is \"L\" or \"R\"", w);
            g.vertices[index_of_id[id]].side = val.get<std::string>()[0];
        }
    }
    if (j.contains("scalar")) g.scalar = scalar_from_json(j["scalar"], "/scalar");
    try {
        g.topology();
    } catch (const StructureError& e) {
        throw InputError(e.what(), "");
    }
    for (const auto& v : g.vertices)
        if (static_cast<int>(v.rotation.size()) != g.labels[v.sig].arity())
            throw InputError("vertex " + std::to_string(v.id) + " rotation length differs from its signature arity",
                             "/vertices");
    return g;
}

Json grid_to_json(const PlanarGrid& g) {
    Json j;
    std::vector<std::string> names;
    Json sigs = Json::object();
    for (std::size_t l = 0; l < g.labels.size(); ++l) {
        std::string name = l < g.label_names.size() && !g.label_names[l].empty() ? g.label_names[l]
                                                                                 : "f" + std::to_string(l);
        if (sigs.contains(name)) name += "_" + std::to_string(l);
        names.push_back(name);
        sigs[name] = label_to_json(g.labels[l]);
    }
    j["signatures"] = sigs;
    Json verts = Json::array();
    bool any_side = false;
    for (const auto& v : g.vertices) {
        verts.push_back(Json{{"id", v.id}, {"sig", names[v.sig]}, {"rotation", v.rotation}});
        any_side = any_side || v.side;
    }
    j["vertices"] = verts;
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    j["dangling"] = g.dangling;
    if (any_side) {
        Json side = Json::object();
        for (const auto& v : g.vertices)
            if (v.side) side[std::to_string(v.id)] = std::string(1, v.side);
        j["side"] = side;
    }
    if (!g.scalar.is_one()) j["scalar"] = scalar_to_json(g.scalar);
    return j;
}

WeightedPlanarGraph weighted_graph_from_json(const Json& j) {
    WeightedPlanarGraph g;
    const Json& verts = array_member(j, "vertices", "");
    std::map<int, int> index_of_id;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::string w = at("/vertices", i);
        int id = verts[i].is_number_integer() ? verts[i].get<int>() : as_int(member(verts[i], "id", w), at(w, "id"));
        if (!index_of_id.emplace(id, static_cast<int>(i)).second) throw InputError("duplicate vertex id", w);
    }
    g.num_vertices = static_cast<int>(verts.size());
    const Json& edges = array_member(j, "edges", "");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string w = at("/edges", i);
        auto ends = int_list(member(edges[i], "ends", w), at(w, "ends"));
        if (ends.size() != 2) throw InputError("an edge has two ends", at(w, "ends"));
        for (int e : ends)
            if (!index_of_id.count(e)) throw InputError("unknown vertex id", at(w, "ends"));
        Alg wt = edges[i].contains("weight") ? scalar_from_json(edges[i]["weight"], at(w, "weight")) : Alg(1);
        g.add_edge(index_of_id[ends[0]], index_of_id[ends[1]], wt);
    }
    bool has_rotation = false;
    for (const auto& v : verts)
        if (v.is_object() && v.contains("rotation")) has_rotation = true;
    if (has_rotation) {
        const int darts = 2 * static_cast<int>(g.edges.size());
        std::vector<int> seen(darts, 0);
        g.rotation.assign(g.num_vertices, {});
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::string w = at("/vertices", i);
            auto rot = int_list(member(verts[i], "rotation", w), at(w, "rotation"));
            for (int d : rot) {
                if (d < 0 || d >= darts) throw InputError("dart id out of range", at(w, "rotation"));
                const auto& e = g.edges[d / 2];
                if ((d % 2 ? e.v : e.u) != static_cast<int>(i))
                    throw InputError("dart " + std::to_string(d) + " does not start at this vertex", at(w, "rotation"));
                ++seen[d];
            }
            g.rotation[i] = rot;
        }
        for (int d = 0; d < darts; ++d)
            if (seen[d] != 1) throw InputError("dart " + std::to_string(d) + " must appear exactly once", "/vertices");
    } else if (j.contains("coordinates")) {
        std::vector<std::pair<double, double>> xy(g.num_vertices);
        std::vector<bool> set(g.num_vertices, false);
        for (const auto& [key, val] : j["coordinates"].items()) {
            std::string w = "/coordinates/" + key;
            int id = 0;
            try {
                id = std::stoi(key);
            } catch (const std::exception&) {
                throw InputError("coordinate keys are vertex ids", w);
            }
            if (!index_of_id.count(id)) throw InputError("unknown vertex id", w);
            if (!val.is_array() || val.size() != 2 || !val[0].is_number() || !val[1].is_number())
                throw InputError("expected [x, y]", w);
            xy[index_of_id[id]] = {val[0].get<double>(), val[1].get<double>()};
            set[index_of_id[id]] = true;
        }
        for (int v = 0; v < g.num_vertices; ++v)
            if (!set[v]) throw InputError("missing coordinates for a vertex", "/coordinates");
        g.rotation_from_coordinates(xy);
    } else {
        throw InputError("need per-vertex rotations or coordinates", "");
    }
    return g;
}

Json weighted_graph_to_json(const WeightedPlanarGraph& g) {
    Json verts = Json::array();
    for (int v = 0; v < g.num_vertices; ++v) verts.push_back(Json{{"id", v}, {"rotation", g.rotation[v]}});
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(Json{{"ends", {e.u, e.v}}, {"weight", scalar_to_json(e.w)}});
    return Json{{"vertices", verts}, {"edges", edges}};
}

PlanarHypergraph hypergraph_from_json(const Json& j) {
    PlanarHypergraph h;
    h.vertices = int_list(array_member(j, "vertices", ""), "/vertices");
    const Json& hs = array_member(j, "hyperedges", "");
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::string w = at("/hyperedges", i);
        PlanarHypergraph::Hyperedge e;
        e.id = as_int(member(hs[i], "id", w), at(w, "id"));
        e.members = int_list(member(hs[i], "members", w), at(w, "members"));
        h.hyperedges.push_back(e);
    }
    const Json& rot = member(j, "rotation", "");
    if (!rot.is_object()) throw InputError("expected an object", "/rotation");
    for (const auto& [key, val] : rot.items()) h.rotation[key] = int_list(val, "/rotation/" + key);
    return h;
}

Json hypergraph_to_json(const PlanarHypergraph& h) {
    Json hs = Json::array();
    for (const auto& e : h.hyperedges) hs.push_back(Json{{"id", e.id}, {"members", e.members}});
    Json rot = Json::object();
    for (const auto& [k, v] : h.rotation) rot[k] = v;
    return Json{{"vertices", h.vertices}, {"hyperedges", hs}, {"rotation", rot}};
}

Transform2x2 parse_matrix(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<std::string> cells;
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw InputError("matrix must be \"a,b;c,d\"", "--matrix");
    Alg m[2][2];
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            try {
                m[r][c] = Alg::parse(rows[r][c]);
            } catch (const ParseError& e) {
                throw InputError(e.what(), "--matrix");
            }
        }
    return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

Json matrix_to_json(const Transform2x2& t) {
    return Json::array({Json::array({scalar_to_json(t.t00), scalar_to_json(t.t01)}),
                        Json::array({scalar_to_json(t.t10), scalar_to_json(t.t11)})});
}

}  // namespace holant
