#include <doctest.h>

#include "vmodel/cli.hpp"
#include "vmodel/io.hpp"

#include <sstream>

using namespace vmodel;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name)
{
    return std::string(VMODEL_TEST_DATA) + "/" + name;
}

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("partition")
{
    auto r = run({"partition", "--graph", data("p3.json"), "--model", data("matching.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "3/1\n");
    r = run({"partition", "--graph", data("two_triangles.json"), "--model", data("matching.json"), "--method", "brute"});
    CHECK(r.out == "16/1\n");
    r = run({"--format", "json", "partition", "--graph", data("two_triangles.json"), "--model", data("sign.json")});
    CHECK(Json::parse(r.out)["value"] == "1/1+0/1*i");
    r = run({"partition", "--graph", data("star.json"), "--model", data("matching.json"), "--order", "given:3,0"});
    // Star-like tree 0,1 - 3 - 4 - 2 has 1 + 4 + 2 matchings.
    CHECK(r.out == "7/1\n");
    r = run({"partition", "--graph", data("arc_loop.json"), "--model", data("directed_rank1.json")});
    CHECK(r.out == "36/1\n");
}

TEST_CASE("partition errors exit with 2")
{
    CHECK(run({"partition", "--graph", data("bad.json"), "--model", data("matching.json")}).code == 2);
    CHECK(run({"partition", "--graph", data("out_of_range.json"), "--model", data("matching.json")}).code == 2);
    CHECK(run({"partition", "--graph", data("missing.json"), "--model", data("matching.json")}).code == 2);
    auto capped = run({"--cap-edges", "3", "partition", "--graph", data("two_triangles.json"), "--model",
                       data("matching.json"), "--method", "brute"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("cap") != std::string::npos);
    CHECK(run({"partition", "--graph", data("two_triangles.json"), "--model", data("matching.json"), "--cap-width",
               "1"})
              .code == 2);
    CHECK(run({"partition", "--graph", data("arc_loop.json"), "--model", data("matching.json")}).code == 2);
    CHECK(run({"partition", "--graph", data("p3.json"), "--model", data("matching.json"), "--order", "fast"}).code ==
          2);
    CHECK(run({"partition", "--graph", data("p3.json")}).code == 2);
    CHECK(run({"partition", "--graph", data("p3.json"), "--model", data("matching.json"), "--method", "magic"}).code ==
          2);
}

TEST_CASE("certify")
{
    auto r = run({"certify", "thm1", "--graph", data("star.json"), "--model", data("matching.json"), "--u", "0,1,2",
                  "--s", "3,3,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "0/1 (identity holds)\n");

    r = run({"certify", "thm2", "--graph", data("star.json"), "--oracle", "model:" + data("one_plus_two_power.json"),
             "--u", "0,1,2", "--s", "3,3,4"});
    CHECK(r.code == 0);

    r = run({"certify", "thm2", "--graph", data("star.json"), "--model", data("one_plus_two_power.json"), "--u", "0,3",
             "--s", "3,4"});
    CHECK(r.code == 2);

    r = run({"certify", "thm1", "--graph", data("star.json"), "--oracle", "counterexample", "--u", "0,1", "--s", "0,1"});
    CHECK(r.code == 0);
    r = run({"certify", "thm1", "--graph", data("edgeless2.json"), "--oracle", "counterexample", "--u", "0,1", "--s",
             "0,1"});
    CHECK(r.code == 1);
    auto w = Json::parse(r.out);
    CHECK(w.contains("graph"));
    CHECK(w["U"] == Json::array({0, 1}));
    CHECK(w["value"] == "6/1");

    r = run({"certify", "thm3", "--graph", data("arc_loop.json"), "--model", data("directed_rank1.json"), "--u", "0,1",
             "--s", "1,1"});
    CHECK(r.code == 0);
    r = run({"certify", "thm4", "--graph", data("arc_loop.json"), "--model", data("directed_rank1.json"), "--u", "0",
             "--s", "1"});
    // One pin is below the rank-1 threshold: G/s is two loops at one vertex, 2^2 * 3^2.
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["value"] == "36/1");
    CHECK(run({"certify", "thm3", "--graph", data("p3.json"), "--model", data("directed_rank1.json"), "--u", "0", "--s",
               "1"})
              .code == 2);
    CHECK(run({"certify", "thm1", "--graph", data("p3.json"), "--model", data("matching.json"), "--u", "0,1", "--s",
               "1"})
              .code == 2);
    CHECK(run({"--cap-usize", "2", "certify", "thm1", "--graph", data("star.json"), "--model", data("matching.json"),
               "--u", "0,1,2", "--s", "3,3,4"})
              .code == 2);
    CHECK(run({"certify", "thm5", "--graph", data("p3.json"), "--model", data("matching.json")}).code == 2);
    CHECK(run({"certify", "thm1", "--graph", data("p3.json"), "--u", "0", "--s", "1"}).code == 2);
}

TEST_CASE("certify search and multiplicative")
{
    auto r = run({"certify", "search", "--oracle", "counterexample", "--usize", "2", "--max-n", "4"});
    CHECK(r.code == 1);
    CHECK(r.out == R"({"graph":{"directed":false,"n":2,"edges":[]},"U":[0,1],"s":[0,1],"value":"6/1"})"
                   "\n");
    r = run({"certify", "search", "--model", data("matching.json"), "--usize", "3", "--max-n", "4"});
    CHECK(r.code == 0);
    r = run({"certify", "search", "--model", data("one_plus_two_power.json"), "--usize", "3", "--max-n", "4",
             "--mode", "contract"});
    CHECK(r.code == 0);
    r = run({"certify", "search", "--oracle", "table:" + data("two_power_table.json"), "--usize", "2", "--max-n", "2",
             "--max-e", "0", "--mode", "contract"});
    CHECK(r.code == 0);
    // The table does not list the surgeries of a one-edge graph.
    r = run({"certify", "search", "--oracle", "table:" + data("two_power_table.json"), "--usize", "2", "--max-n", "3",
             "--max-e", "1"});
    CHECK(r.code == 2);

    CHECK(run({"certify", "multiplicative", "--oracle", "counterexample"}).code == 0);
    CHECK(run({"certify", "multiplicative", "--model", data("directed_rank1.json"), "--count", "10"}).code == 0);
    CHECK(run({"certify", "multiplicative", "--oracle", "table:" + data("two_power_table.json")}).code == 0);
    CHECK(run({"certify", "multiplicative", "--oracle", "table:" + data("empty_table.json")}).code == 1);
    CHECK(run({"certify", "multiplicative", "--oracle", "lookup:x"}).code == 2);
}

TEST_CASE("symbolic")
{
    auto r = run({"symbolic", "p", "--graph", data("p3.json"), "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/1*y[0,1]^2*y[0,2] + 2/1*y[0,1]*y[1,0]*y[1,1] + 1/1*y[1,0]^2*y[2,0]\n");
    r = run({"symbolic", "diagram", "--monomial", "x[1,2]^2", "--k", "2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("commutes") != std::string::npos);
    r = run({"--format", "json", "symbolic", "diagram", "--monomial", "x[1,2]*x[2,3]", "--k", "2", "--n", "3"});
    CHECK(Json::parse(r.out)["commutes"] == true);
    CHECK(run({"symbolic", "diagram", "--monomial", "x[1,4]", "--k", "2", "--n", "3"}).code == 2);
    CHECK(run({"symbolic", "diagram", "--monomial", "2*x[1,2]", "--k", "2", "--n", "3"}).code == 2);
    CHECK(run({"symbolic", "p", "--graph", data("arc_loop.json"), "--k", "2"}).code == 2);
    CHECK(run({"symbolic"}).code == 2);
}

TEST_CASE("connection and moment-rank")
{
    auto r = run({"connection", "rank", "--oracle", "counterexample", "--l", "1", "--max-extra", "2", "--max-edges", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "family: 74\nrank: 2\nbound: 4\nok\n");
    r = run({"--format", "json", "connection", "rank", "--oracle", "model:" + data("one_plus_two_power.json"), "--l",
             "2", "--max-extra", "1", "--max-edges", "3", "--r", "2"});
    auto j = Json::parse(r.out);
    CHECK(j["rank"] == 4);
    CHECK(j["bound"] == 4);
    CHECK(j["status"] == "ok");
    r = run({"connection", "rank", "--oracle", "model:" + data("one_plus_two_power.json"), "--l", "1", "--r", "1"});
    CHECK(r.code == 1);
    r = run({"connection", "rank", "--oracle", "model:" + data("matching.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("bound: unknown") != std::string::npos);

    r = run({"moment-rank", "--model", data("one_plus_two_power.json"), "--degree", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "rank 2 (slice 3x3)\n");
    CHECK(run({"moment-rank", "--model", data("one_plus_two_power.json"), "--degree", "7"}).code == 2);
}

TEST_CASE("suite")
{
    auto a = run({"suite", "--scale", "smoke", "--seed", "7"});
    CHECK(a.code == 0);
    auto b = run({"suite", "--scale", "smoke", "--seed", "7"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
    auto j = run({"--format", "json", "suite", "--scale", "smoke", "--only", "partition."});
    CHECK(j.code == 0);
    auto report = Json::parse(j.out);
    CHECK(report["failed"] == 0);
    CHECK(report["checks"].size() == 7);
    CHECK(run({"suite", "--scale", "huge"}).code == 2);
    auto fault = run({"suite", "--scale", "smoke", "--inject-fault", "--only", "partition.engine"});
    CHECK(fault.code == 1);
    CHECK(fault.out.find("FAIL partition.engine-equivalence ") != std::string::npos);
}

TEST_CASE("usage")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--format", "yaml", "moment-rank", "--model", data("matching.json")}).code == 2);
}
