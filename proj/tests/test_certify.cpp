#include <doctest.h>

#include "vmodel/certify.hpp"
#include "vmodel/error.hpp"
#include "vmodel/isomorphism.hpp"
#include "vmodel/random.hpp"

#include <algorithm>
#include <numeric>

using namespace vmodel;

namespace {

// Alternating sum written out over std::next_permutation with the sign from
// an inversion count.
Scalar alt_by_hand(const ParamOracle& f, const Multigraph& g, const PinMap& p, bool contract)
{
    const std::size_t m = p.size();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar sum(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                inversions += perm[i] > perm[j];
        std::vector<int> targets(m);
        for (std::size_t i = 0; i < m; ++i)
            targets[i] = p.targets()[static_cast<std::size_t>(perm[i])];
        PinMap q(std::vector<int>(p.pins().begin(), p.pins().end()), targets);
        Scalar v = contract ? f(contract_pins(g, q)) : f(add_pins(g, q));
        sum += inversions % 2 ? -v : v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

ParamOracle two_power()
{
    return ParamOracle([](const Multigraph& g) { return pow(Scalar(2), static_cast<unsigned>(g.vertex_count())); },
                       Provenance::table_backed, "2^|V|");
}

} // namespace

TEST_CASE("counterexample values")
{
    CHECK(counterexample_f(graphs::cycle(3)) == Scalar(-2));
    CHECK(counterexample_f(Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})) == Scalar(4));
    CHECK(counterexample_f(graphs::path(3)).is_zero());
    CHECK(counterexample_f(graphs::cycle(1)) == Scalar(-2));
    CHECK(counterexample_f(Multigraph()).is_one());
    CHECK(counterexample_f(graphs::edgeless(1)).is_zero());
}

TEST_CASE("pin sums vanish for models with |U| = k + 1")
{
    Rng rng(31);
    for (int i = 0; i < 80; ++i) {
        auto g = random_graph(rng, {3, 5, 5, true});
        int k = static_cast<int>(rng.uniform(1, 2));
        auto p = random_pins(rng, g.vertex_count(), k + 1, false);
        auto f = model_oracle(random_model(rng, k, Ring::gaussian, g.max_degree() + 2 * (k + 1)));
        CHECK(alt_sum_pins(f, g, p).is_zero());
        CHECK(alt_by_hand(f, g, p, false).is_zero());
    }
}

TEST_CASE("pin sums agree with a hand-written alternating sum")
{
    Rng rng(37);
    auto f = counterexample_oracle();
    for (int i = 0; i < 80; ++i) {
        auto g = random_graph(rng, {3, 5, 4, true});
        auto p = random_pins(rng, g.vertex_count(), static_cast<int>(rng.uniform(1, 3)), false);
        CHECK(alt_sum_pins(f, g, p) == alt_by_hand(f, g, p, false));
    }
}

TEST_CASE("equal targets cancel")
{
    Rng rng(1);
    auto f = model_oracle(random_model(rng, 3, Ring::rational, 6));
    CHECK(alt_sum_pins(f, graphs::path(3), PinMap({0, 1}, {2, 2})).is_zero());
    CHECK(alt_sum_pins(counterexample_oracle(), graphs::edgeless(3), PinMap({0, 1}, {2, 2})).is_zero());
}

TEST_CASE("the counterexample search finds the two-vertex witness")
{
    auto w = search_violation(counterexample_oracle(), 2, {4, 4}, SumMode::pins);
    REQUIRE(w);
    CHECK(w->graph == graphs::edgeless(2));
    CHECK(w->pins == PinMap({0, 1}, {0, 1}));
    // Two loops (+4) minus a double edge (-2).
    CHECK(w->value == Scalar(6));
}

TEST_CASE("the matching model admits no witness with |U| = 3")
{
    SearchStats stats;
    auto w = search_violation(model_oracle(models::matching(12)), 3, {4, 4}, SumMode::pins, {}, &stats);
    CHECK_FALSE(w);
    CHECK(stats.graphs > 0);
    CHECK(stats.evaluations <= stats.instances * 6);
}

TEST_CASE("contraction sums vanish for rank-r models")
{
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        auto g = random_graph(rng, {4, 5, 5, true});
        int r = static_cast<int>(rng.uniform(1, 2));
        auto p = random_pins(rng, g.vertex_count(), r + 1, true);
        auto y = random_rank_r_model(rng, static_cast<int>(rng.uniform(1, 3)), r, Ring::rational, 2 * 5);
        auto f = model_oracle(y);
        CHECK(alt_sum_contract(f, g, p).is_zero());
        CHECK(alt_by_hand(f, g, p, true).is_zero());
    }
}

TEST_CASE("2^|V| passes disjoint contraction sums and fails overlapping ones")
{
    auto f = two_power();
    CHECK_FALSE(search_violation(f, 2, {4, 4}, SumMode::contract));
    // U = {0, 1}, s = (1, 0): one term merges both, the other leaves them.
    Scalar overlap = alt_sum_contract(f, graphs::edgeless(2), PinMap({0, 1}, {1, 0}), TargetPolicy::allow_overlap);
    CHECK(overlap == Scalar(2) - Scalar(4));
    CHECK_THROWS_AS(alt_sum_contract(f, graphs::edgeless(2), PinMap({0, 1}, {1, 0})), PreconditionError);
}

TEST_CASE("pendant reduction carries pin sums to contraction sums")
{
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        auto g = random_graph(rng, {2, 5, 5, true});
        auto p = random_pins(rng, g.vertex_count(), static_cast<int>(rng.uniform(0, 2)), false);
        auto f = i % 2 ? counterexample_oracle() : model_oracle(models::matching(g.max_degree() + 4));
        auto [a, b] = thm2_implies_thm1_check(f, g, p);
        CHECK(a == b);
    }
    auto f = counterexample_oracle();
    auto g = graphs::cycle(3);
    auto [a, b] = thm2_implies_thm1_check(f, g, PinMap());
    CHECK(a == f(g));
    CHECK(b == f(g));
    auto [c, d] = thm2_implies_thm1_check(f, graphs::edgeless(2), PinMap({0, 1}, {0, 1}));
    CHECK(c == Scalar(6));
    CHECK(d == Scalar(6));
}

TEST_CASE("transposing s negates the sum")
{
    Rng rng(47);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(rng, {3, 5, 4, true});
        auto p = random_pins(rng, g.vertex_count(), 3, false);
        auto f = model_oracle(random_model(rng, 3, Ring::rational, g.max_degree() + 6));
        std::vector<int> t(p.targets().begin(), p.targets().end());
        std::swap(t[0], t[2]);
        PinMap q(std::vector<int>(p.pins().begin(), p.pins().end()), t);
        CHECK(alt_sum_pins(f, g, q) == -alt_sum_pins(f, g, p));
    }
}

TEST_CASE("directed sums")
{
    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        auto g = random_digraph(rng, {3, 4, 4, true});
        auto joint = random_rank_r_model(rng, 2, 1, Ring::rational, 12);
        auto f = directed_model_oracle(DirectedVertexModel::from_joint(joint));
        CHECK(alt_sum_contract(f, g, random_pins(rng, g.vertex_count(), 2, true)).is_zero());
        auto h = directed_model_oracle(random_directed_model(rng, 1, Ring::rational, 12));
        CHECK(alt_sum_pins(h, g, random_pins(rng, g.vertex_count(), 2, false)).is_zero());
    }
}

TEST_CASE("caps and tables")
{
    auto f = counterexample_oracle();
    CHECK_THROWS_AS(alt_sum_pins(f, graphs::edgeless(8), PinMap({0, 1, 2, 3, 4, 5, 6}, {7, 7, 7, 7, 7, 7, 7})),
                    CapExceeded);
    CHECK_NOTHROW(alt_sum_pins(f, graphs::edgeless(3), PinMap({0, 1}, {2, 2}), {2}));

    std::map<Multigraph, Scalar> table{{Multigraph(), Scalar(2)}, {graphs::edgeless(1), Scalar(3)}};
    auto t = table_oracle<false>(table);
    CHECK(t(graphs::edgeless(1)) == Scalar(3));
    CHECK_THROWS_AS(t(graphs::path(2)), OutsideTable);
    CHECK_FALSE(check_multiplicative(t, {}));
    CHECK(check_multiplicative(f, {{graphs::cycle(3), graphs::cycle(3)}, {graphs::cycle(1), graphs::path(2)}}));
}

TEST_CASE("memoized oracles return the same values")
{
    int calls = 0;
    ParamOracle counting(
        [&](const Multigraph& g) {
            ++calls;
            return Scalar(static_cast<long long>(g.edge_count()));
        },
        Provenance::builtin, "edges");
    auto m = memoized(counting);
    CHECK(m(graphs::path(4)) == Scalar(3));
    CHECK(m(graphs::path(4)) == Scalar(3));
    CHECK(calls == 1);
}
