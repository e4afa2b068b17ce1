#pragma once

#include "vmodel/certify.hpp"
#include "vmodel/graph.hpp"
#include "vmodel/model.hpp"
#include "vmodel/scalar.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vmodel {

using Json = nlohmann::ordered_json;

// {"directed": bool, "n": int, "edges": [[u, v], ...], "labels": [...]}.
struct GraphDocument {
    bool directed = false;
    Multigraph graph;
    DirectedMultigraph digraph;
    std::vector<int> labels;
};

GraphDocument parse_graph(const Json& j);
Json graph_json(const Multigraph& g);
Json graph_json(const DirectedMultigraph& g);

// {"k", "scalar", "degree_cap", "entries": [{"alpha" | "alpha_in"/"alpha_out", "value"}]}.
// Values are "p/q" strings, or [re, im] pairs in gaussian models.
struct ModelDocument {
    bool directed = false;
    VertexModel model;
    DirectedVertexModel directed_model;
};

ModelDocument parse_model(const Json& j);
Json model_json(const VertexModel& y);

// {"directed": bool, "entries": [{"graph": {...}, "value": ...}]}.
struct TableDocument {
    bool directed = false;
    std::map<Multigraph, Scalar> table;
    std::map<DirectedMultigraph, Scalar> directed_table;
};

TableDocument parse_table(const Json& j);

Scalar parse_scalar(const Json& j);
Json scalar_json(const Scalar& s);

template <bool D>
Json witness_json(const BasicWitness<D>& w);

// Reads and parses a JSON file; failures raise ParseError naming the path.
Json read_json_file(const std::string& path);

// "0,1,2" -> {0, 1, 2}; the empty string gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

} // namespace vmodel
