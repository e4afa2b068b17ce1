#include <doctest.h>

#include "vmodel/error.hpp"
#include "vmodel/io.hpp"

using namespace vmodel;

TEST_CASE("graph documents")
{
    auto doc = parse_graph(Json::parse(R"({"directed": false, "n": 3, "edges": [[1, 0], [0, 1], [2, 2]]})"));
    CHECK_FALSE(doc.directed);
    CHECK(doc.graph == Multigraph(3, {{0, 1}, {0, 1}, {2, 2}}));
    CHECK(graph_json(doc.graph).dump() == R"({"directed":false,"n":3,"edges":[[0,1],[0,1],[2,2]]})");

    auto d = parse_graph(Json::parse(R"({"directed": true, "n": 2, "edges": [[1, 0]]})"));
    CHECK(d.directed);
    CHECK(d.digraph == DirectedMultigraph(2, {{1, 0}}));

    auto l = parse_graph(Json::parse(R"({"directed": false, "n": 2, "edges": [], "labels": [1]})"));
    CHECK(l.labels == std::vector<int>{1});

    CHECK_THROWS_AS(parse_graph(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), Error);
    CHECK_THROWS_AS(parse_graph(Json::parse(R"({"n": 2, "edges": [[0]]})")), ParseError);
    CHECK_THROWS_AS(parse_graph(Json::parse(R"({"edges": []})")), ParseError);
    CHECK_THROWS_AS(parse_graph(Json::parse("[1, 2]")), ParseError);
}

TEST_CASE("model documents")
{
    auto doc = parse_model(Json::parse(R"({"k": 2, "scalar": "rational", "degree_cap": 2,
        "entries": [{"alpha": [1, 0], "value": "3/4"}, {"alpha": [0, 2], "value": -1}]})"));
    CHECK_FALSE(doc.directed);
    CHECK(doc.model.value(MultisetIndex({1, 0})) == Scalar(Rational(3, 4)));
    CHECK(doc.model.value(MultisetIndex({0, 2})) == Scalar(-1));
    CHECK(doc.model.degree_cap() == 2);

    auto g = parse_model(Json::parse(R"({"k": 1, "scalar": "gaussian", "degree_cap": null,
        "entries": [{"alpha": [2], "value": ["1/2", "-3"]}]})"));
    CHECK(g.model.ring() == Ring::gaussian);
    CHECK(g.model.value(MultisetIndex({2})) == Scalar::gaussian(Rational(1, 2), -3));
    CHECK_FALSE(g.model.degree_cap());

    auto d = parse_model(Json::parse(R"({"k": 1, "scalar": "rational",
        "entries": [{"alpha_in": [1], "alpha_out": [0], "value": "5"}]})"));
    CHECK(d.directed);
    CHECK(d.directed_model.value(MultisetIndex({1}), MultisetIndex({0})) == Scalar(5));

    CHECK_THROWS_AS(parse_model(Json::parse(R"({"k": 1, "scalar": "rational",
        "entries": [{"alpha": [1], "value": "1"}, {"alpha": [1], "value": "2"}]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_model(Json::parse(R"({"k": 1, "scalar": "real", "entries": []})")), ParseError);
    CHECK_THROWS_AS(parse_model(Json::parse(R"({"k": 2, "scalar": "rational",
        "entries": [{"alpha": [1], "value": "1"}]})")),
                    Error);
}

TEST_CASE("model documents round-trip")
{
    auto y = models::matching(3);
    auto back = parse_model(model_json(y));
    CHECK(back.model.entries() == y.entries());
    CHECK(back.model.degree_cap() == y.degree_cap());
}

TEST_CASE("tables, scalars and lists")
{
    auto t = parse_table(Json::parse(R"({"directed": false, "entries": [
        {"graph": {"n": 1, "edges": [[0, 0]]}, "value": "-2"}]})"));
    CHECK(t.table.at(graphs::cycle(1)) == Scalar(-2));
    CHECK(parse_scalar(Json("2/6")) == Scalar(Rational(1, 3)));
    CHECK(parse_scalar(Json(4)) == Scalar(4));
    CHECK(scalar_json(Scalar::gaussian(1, -1)) == Json("1/1-1/1*i"));
    CHECK(parse_int_list("0, 1,2") == std::vector<int>{0, 1, 2});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("0,,1"), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("witness documents")
{
    Witness w{graphs::edgeless(2), PinMap({0, 1}, {0, 1}), Scalar(6)};
    CHECK(witness_json(w).dump() == R"({"graph":{"directed":false,"n":2,"edges":[]},"U":[0,1],"s":[0,1],"value":"6/1"})");
}
