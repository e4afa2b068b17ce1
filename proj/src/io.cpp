#include "vmodel/io.hpp"

#include "vmodel/error.hpp"

#include <fstream>
#include <sstream>

namespace vmodel {

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j)
        out.push_back(as_int(x, what));
    return out;
}

MultisetIndex parse_alpha(const Json& j, int k, const char* what)
{
    auto counts = int_array(j, what);
    if (static_cast<int>(counts.size()) != k)
        throw ParseError(std::string(what) + " must have length k = " + std::to_string(k));
    for (int c : counts)
        if (c < 0)
            throw ParseError(std::string(what) + " entries must be nonnegative");
    return MultisetIndex(std::move(counts));
}

template <bool D>
Json edges_json(const BasicMultigraph<D>& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return Json{{"directed", D}, {"n", g.vertex_count()}, {"edges", edges}};
}

} // namespace

Scalar parse_scalar(const Json& j)
{
    try {
        if (j.is_string())
            return Scalar::parse(j.get<std::string>());
        if (j.is_number_integer())
            return Scalar(j.get<long long>());
        if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
            return Scalar::gaussian(Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>()));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad scalar: ") + e.what());
    }
    throw ParseError("scalar must be a \"p/q\" string or a [re, im] pair of strings, got " + j.dump());
}

Json scalar_json(const Scalar& s)
{
    return s.to_string();
}

GraphDocument parse_graph(const Json& j)
{
    GraphDocument doc;
    if (!j.is_object())
        throw ParseError("graph file must hold a JSON object");
    if (j.contains("directed")) {
        if (!j.at("directed").is_boolean())
            throw ParseError("\"directed\" must be a boolean");
        doc.directed = j.at("directed").get<bool>();
    }
    int n = as_int(field(j, "n"), "n");
    if (n < 0)
        throw ParseError("n must be nonnegative");
    const Json& edges = field(j, "edges");
    if (!edges.is_array())
        throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
        auto uv = int_array(e, "edge");
        if (uv.size() != 2)
            throw ParseError("every edge is a pair [u, v]");
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw ParseError("edge endpoint outside 0..n-1");
        list.emplace_back(uv[0], uv[1]);
    }
    if (doc.directed)
        doc.digraph = DirectedMultigraph(n, std::move(list));
    else
        doc.graph = Multigraph(n, std::move(list));
    if (j.contains("labels")) {
        doc.labels = int_array(j.at("labels"), "labels");
        if (doc.directed)
            throw ParseError("labeled graphs must be undirected");
        LabeledGraph{doc.graph, doc.labels}.validate();
    }
    return doc;
}

Json graph_json(const Multigraph& g)
{
    return edges_json(g);
}

Json graph_json(const DirectedMultigraph& g)
{
    return edges_json(g);
}

ModelDocument parse_model(const Json& j)
{
    if (!j.is_object())
        throw ParseError("model file must hold a JSON object");
    int k = as_int(field(j, "k"), "k");
    if (k < 0)
        throw ParseError("k must be nonnegative");
    Ring ring = Ring::rational;
    if (j.contains("scalar")) {
        std::string s = j.at("scalar").is_string() ? j.at("scalar").get<std::string>() : "";
        if (s == "gaussian")
            ring = Ring::gaussian;
        else if (s != "rational")
            throw ParseError("\"scalar\" must be \"rational\" or \"gaussian\"");
    }
    std::optional<int> cap;
    if (j.contains("degree_cap") && !j.at("degree_cap").is_null())
        cap = as_int(j.at("degree_cap"), "degree_cap");
    const Json& entries = field(j, "entries");
    if (!entries.is_array())
        throw ParseError("\"entries\" must be an array");

    ModelDocument doc;
    doc.directed = !entries.empty() && entries[0].is_object() && entries[0].contains("alpha_in");
    if (j.contains("directed") && j.at("directed").is_boolean())
        doc.directed = j.at("directed").get<bool>();
    if (doc.directed) {
        std::map<std::pair<MultisetIndex, MultisetIndex>, Scalar> values;
        for (const auto& e : entries) {
            auto key = std::make_pair(parse_alpha(field(e, "alpha_in"), k, "alpha_in"),
                                      parse_alpha(field(e, "alpha_out"), k, "alpha_out"));
            if (!values.emplace(key, parse_scalar(field(e, "value"))).second)
                throw ParseError("duplicate model entry");
        }
        doc.directed_model = DirectedVertexModel(k, ring, values, cap);
    } else {
        std::map<MultisetIndex, Scalar> values;
        for (const auto& e : entries) {
            if (!values.emplace(parse_alpha(field(e, "alpha"), k, "alpha"), parse_scalar(field(e, "value"))).second)
                throw ParseError("duplicate model entry");
        }
        doc.model = VertexModel(k, ring, std::move(values), cap);
    }
    return doc;
}

Json model_json(const VertexModel& y)
{
    Json entries = Json::array();
    for (const auto& [alpha, v] : y.entries()) {
        Json value = y.ring() == Ring::gaussian ? Json::array({v.real().to_string(), v.imag().to_string()})
                                                : Json(v.to_string());
        entries.push_back({{"alpha", std::vector<int>(alpha.counts().begin(), alpha.counts().end())}, {"value", value}});
    }
    Json cap = y.degree_cap() ? Json(*y.degree_cap()) : Json(nullptr);
    return Json{{"k", y.colors()}, {"scalar", to_string(y.ring())}, {"degree_cap", cap}, {"entries", entries}};
}

TableDocument parse_table(const Json& j)
{
    TableDocument doc;
    if (!j.is_object())
        throw ParseError("table file must hold a JSON object");
    if (j.contains("directed") && j.at("directed").is_boolean())
        doc.directed = j.at("directed").get<bool>();
    const Json& entries = field(j, "entries");
    if (!entries.is_array())
        throw ParseError("\"entries\" must be an array");
    for (const auto& e : entries) {
        Json g = field(e, "graph");
        if (g.is_object() && !g.contains("directed"))
            g["directed"] = doc.directed;
        GraphDocument gd = parse_graph(g);
        if (gd.directed != doc.directed)
            throw ParseError("table mixes directed and undirected graphs");
        Scalar v = parse_scalar(field(e, "value"));
        if (doc.directed)
            doc.directed_table[gd.digraph] = v;
        else
            doc.table[gd.graph] = v;
    }
    return doc;
}

template <bool D>
Json witness_json(const BasicWitness<D>& w)
{
    return Json{{"graph", graph_json(w.graph)},
                {"U", std::vector<int>(w.pins.pins().begin(), w.pins.pins().end())},
                {"s", std::vector<int>(w.pins.targets().begin(), w.pins.targets().end())},
                {"value", scalar_json(w.value)}};
}

template Json witness_json(const BasicWitness<false>&);
template Json witness_json(const BasicWitness<true>&);

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": malformed JSON: " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("expected a comma-separated integer list, got \"" + text + "\"");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw ParseError("expected a comma-separated integer list, got \"" + text + "\"");
        out.push_back(v);
    }
    return out;
}

} // namespace vmodel
