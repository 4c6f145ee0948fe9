#pragma once

#include "holant/grid.hpp"
#include "holant/sigcalc.hpp"
#include "holant/solvers.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace holant {

using Json = nlohmann::ordered_json;

/// Malformed input file; `where` is a JSON pointer into the document.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& msg, std::string where)
        : std::runtime_error(msg + " at " + (where.empty() ? "/" : where)), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

Json read_json_file(const std::string& path);

/// Scalar from a grammar string or a JSON integer.
Alg scalar_from_json(const Json& j, const std::string& where = "");
Json scalar_to_json(const Alg& x);

Sig sig_from_json(const Json& j, const std::string& where = "");
Json sig_to_json(const Sig& f);

/// Array of n+1 scalars, or {"arity": n, "values": [2^n scalars]} for a general signature.
Label label_from_json(const Json& j, const std::string& where = "");
Json label_to_json(const Label& l);

PlanarGrid grid_from_json(const Json& j);
Json grid_to_json(const PlanarGrid& g);

/// {"vertices": [{"id", "rotation": [darts]}], "edges": [{"ends": [u, v], "weight": expr}]};
/// dart 2e sits at ends[0] of edge e, dart 2e+1 at ends[1]. Without rotations,
/// "coordinates": {id: [x, y]} gives a straight-line drawing.
WeightedPlanarGraph weighted_graph_from_json(const Json& j);
Json weighted_graph_to_json(const WeightedPlanarGraph& g);

PlanarHypergraph hypergraph_from_json(const Json& j);
Json hypergraph_to_json(const PlanarHypergraph& h);

/// "a,b;c,d" with scalar entries.
Transform2x2 parse_matrix(const std::string& text);
Json matrix_to_json(const Transform2x2& t);

}  // namespace holant
