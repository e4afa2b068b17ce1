#include <doctest.h>

#include "vmodel/error.hpp"
#include "vmodel/partition.hpp"
#include "vmodel/random.hpp"
#include "vmodel/symbolic.hpp"

using namespace vmodel;

namespace {

YPolynomial ymono(std::vector<std::pair<std::vector<int>, int>> factors, long long coeff = 1)
{
    std::vector<std::pair<MultisetIndex, int>> f;
    for (auto& [alpha, e] : factors)
        f.emplace_back(MultisetIndex(alpha), e);
    YPolynomial p;
    p.add_term(YPolynomial::make_monomial(std::move(f)), Scalar(coeff));
    return p;
}

} // namespace

TEST_CASE("p of a path on three vertices with two colors")
{
    // Colorings of the two edges: (1,1), (1,2), (2,1), (2,2).
    YPolynomial expected = ymono({{{1, 0}, 2}, {{2, 0}, 1}}) + ymono({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}, 2) +
                           ymono({{{0, 1}, 2}, {{0, 2}, 1}});
    CHECK(p_poly(graphs::path(3), 2) == expected);
    CHECK(to_string(p_poly(graphs::path(3), 2)) ==
          "1/1*y[0,1]^2*y[0,2] + 2/1*y[0,1]*y[1,0]*y[1,1] + 1/1*y[1,0]^2*y[2,0]");
}

TEST_CASE("p conventions for k = 0 and loops")
{
    CHECK(p_poly(graphs::edgeless(3), 0) == ymono({{{}, 3}}));
    CHECK(p_poly(graphs::path(2), 0).is_zero());
    CHECK(p_poly(Multigraph(), 2) == YPolynomial::constant(Scalar(1)));
    // One loop, one color: the vertex sees its color twice.
    CHECK(p_poly(graphs::cycle(1), 1) == ymono({{{2}, 1}}));
    CHECK_THROWS_AS(p_poly(graphs::complete(5), 2, {4, 8}), CapExceeded);
}

TEST_CASE("p is multiplicative and evaluates to f_y")
{
    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(rng, {0, 3, 3, true});
        auto h = random_graph(rng, {0, 3, 3, true});
        CHECK(p_poly(disjoint_union(g, h), 2) == p_poly(g, 2) * p_poly(h, 2));
        auto y = random_model(rng, 2, Ring::gaussian, g.max_degree());
        CHECK(evaluate(p_poly(g, 2), y) == partition_brute(g, y));
    }
}

TEST_CASE("monomial parsing and mu")
{
    auto q = parse_xmonomial("x[1,2]^2 * x[3,3]");
    CHECK(to_string(q) == "1/1*x[1,2]^2*x[3,3]");
    CHECK(mu(q, 3) == Multigraph(3, {{0, 1}, {0, 1}, {2, 2}}));
    CHECK(parse_xmonomial("x[2,1]") == parse_xmonomial("x[1,2]"));
    CHECK_THROWS_AS(mu(parse_xmonomial("3*x[1,2]"), 2), PreconditionError);
    CHECK_THROWS_AS(mu(q, 2), PreconditionError);
    CHECK_THROWS_AS(parse_xmonomial("x[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_xmonomial("x[1,2"), ParseError);
    CHECK_THROWS_AS(parse_xmonomial(""), ParseError);
}

TEST_CASE("tau and sigma on x[1,2]")
{
    auto q = parse_xmonomial("x[1,2]");
    // tau(x12) = z11 z12 + z21 z22 for k = 2.
    CHECK(to_string(tau(q, 2, 2)) == "1/1*z[1,1]*z[1,2] + 1/1*z[2,1]*z[2,2]");
    // sigma sends each column to y of its exponent vector.
    auto s = sigma(tau(q, 2, 2), 2, 2);
    CHECK(s == ymono({{{1, 0}, 2}}) + ymono({{{0, 1}, 2}}));
    // A zero column contributes y_0.
    CHECK(sigma(ZPolynomial::constant(Scalar(1)), 2, 3) == ymono({{{0, 0}, 3}}));
}

TEST_CASE("the diagram commutes on the documented example")
{
    auto sides = diagram_sides(parse_xmonomial("x[1,2]^2"), 2, 3);
    CHECK(sides.commutes());
    // Vertex 3 is isolated, so every term carries y[0,0].
    CHECK(to_string(sides.via_graph) == "1/1*y[0,0]*y[0,2]^2 + 2/1*y[0,0]*y[1,1]^2 + 1/1*y[0,0]*y[2,0]^2");
    CHECK_THROWS_AS(diagram_sides(parse_xmonomial("x[1,2]^7"), 2, 3), CapExceeded);
}

TEST_CASE("quantum graphs are keyed by isomorphism class")
{
    QuantumGraph a;
    a.add(Multigraph(3, {{0, 1}}), Scalar(2));
    a.add(Multigraph(3, {{1, 2}}), Scalar(-2));
    CHECK(a.is_zero());
    auto b = QuantumGraph::single(graphs::path(2)) * QuantumGraph::single(graphs::cycle(1), Scalar(3));
    CHECK(b.terms().size() == 1);
    CHECK(b.terms().begin()->second == Scalar(3));
    CHECK((Scalar(0) * b).is_zero());
}

TEST_CASE("kernel generators map to zero")
{
    // |U| = k + 1 pins: p of the signed sum vanishes.
    auto g = graphs::path(3);
    auto q = kernel_generator_pins(g, PinMap({0, 1}, {2, 0}));
    CHECK(p_quantum(q, 1).is_zero());
    auto r = kernel_generator_pins(graphs::edgeless(3), PinMap({0, 1, 2}, {1, 2, 2}));
    CHECK(p_quantum(r, 2).is_zero());
    // With fewer pins than k + 1 the generator is not in the kernel.
    auto w = kernel_generator_pins(graphs::edgeless(2), PinMap({0, 1}, {0, 1}));
    CHECK_FALSE(p_quantum(w, 2).is_zero());
    CHECK_THROWS_AS(kernel_generator_contract(g, PinMap({0, 1}, {1, 2})), PreconditionError);
    CHECK(kernel_generator_contract(graphs::path(4), PinMap({0, 1}, {2, 3})).terms().size() <= 2);
}
