#include <doctest.h>

#include "vmodel/error.hpp"
#include "vmodel/graph.hpp"
#include "vmodel/isomorphism.hpp"
#include "vmodel/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace vmodel;

namespace {

// Smallest relabeling over all n! permutations: a canonical form that
// shares no code with the backtracking search.
template <bool D>
BasicMultigraph<D> brute_canonical(const BasicMultigraph<D>& g)
{
    std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    BasicMultigraph<D> best = g;
    do {
        best = std::min(best, relabel(g, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Isomorphism classes with n <= max_n and |E| <= max_e by listing every
// labeled edge multiset.
template <bool D>
std::size_t brute_class_count(int max_n, int max_e)
{
    std::set<BasicMultigraph<D>> classes;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = D ? 0 : u; v < n; ++v)
                slots.emplace_back(u, v);
        std::vector<std::pair<int, int>> edges;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            classes.insert(brute_canonical(BasicMultigraph<D>(n, edges)));
            if (static_cast<int>(edges.size()) == max_e)
                return;
            for (std::size_t s = from; s < slots.size(); ++s) {
                edges.push_back(slots[s]);
                self(self, s);
                edges.pop_back();
            }
        };
        rec(rec, 0);
    }
    return classes.size();
}

} // namespace

TEST_CASE("loops add two to the degree")
{
    Multigraph g(2, {{0, 0}, {0, 1}, {1, 0}});
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(1) == 2);
    CHECK(g.loop_count(0) == 1);
    CHECK(g.edge_count() == 3);
    CHECK(g == Multigraph(2, {{1, 0}, {0, 1}, {0, 0}}));
    DirectedMultigraph d(2, {{1, 1}, {0, 1}});
    CHECK(d.in_degree(1) == 2);
    CHECK(d.out_degree(1) == 1);
    CHECK(d.degree(1) == 3);
    CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("builders")
{
    CHECK(graphs::cycle(1) == Multigraph(1, {{0, 0}}));
    CHECK(graphs::cycle(2) == Multigraph(2, {{0, 1}, {0, 1}}));
    CHECK(graphs::complete(4).edge_count() == 6);
    CHECK(graphs::path(1).edge_count() == 0);
    CHECK(graphs::loops(2, 3).degree(1) == 6);
}

TEST_CASE("pins add one edge per pinned vertex")
{
    Multigraph g = graphs::path(3); // 0-1-2
    PinMap s({0, 2}, {2, 2});
    Multigraph gs = add_pins(g, s);
    CHECK(gs == Multigraph(3, {{0, 1}, {1, 2}, {0, 2}, {2, 2}}));
    DirectedMultigraph d(2, {{0, 1}});
    CHECK(add_pins(d, PinMap({1}, {0})) == DirectedMultigraph(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(add_pins(g, PinMap({0}, {3})), PreconditionError);
    CHECK_THROWS_AS(PinMap({1, 0}, {2, 2}), PreconditionError);
}

TEST_CASE("contraction merges pins into their targets")
{
    // Path 0-1-2-3, contract 0 -> 2: classes {0,2}, {1}, {3}.
    Multigraph g = graphs::path(4);
    Multigraph c = contract_pins(g, PinMap({0}, {2}));
    CHECK(c.vertex_count() == 3);
    // {0,2} is vertex 0, 1 -> 1, 3 -> 2; edges 0-1, 1-0, 0-2.
    CHECK(c == Multigraph(3, {{0, 1}, {0, 1}, {0, 2}}));
    // An edge inside a merged class becomes a loop.
    CHECK(contract_pins(graphs::path(2), PinMap({0}, {1})) == Multigraph(1, {{0, 0}}));
    CHECK_THROWS_AS(contract_pins(g, PinMap({0, 2}, {2, 3})), PreconditionError);
    CHECK_NOTHROW(contract_pins(g, PinMap({0, 2}, {2, 3}), TargetPolicy::allow_overlap));
}

TEST_CASE("pendant reduction turns pins into contractions")
{
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(rng, {1, 5, 6, true});
        auto p = random_pins(rng, g.vertex_count(), static_cast<int>(rng.uniform(0, g.vertex_count())), false);
        auto [h, q] = pendant_reduction(g, p);
        CHECK(h.vertex_count() == g.vertex_count() + static_cast<int>(p.size()));
        CHECK(h.edge_count() == g.edge_count() + p.size());
        CHECK_FALSE(q.targets_meet_pins());
        CHECK(contract_pins(h, q) == add_pins(g, p));
    }
}

TEST_CASE("canonical forms agree with the permutation minimum")
{
    Rng rng(5);
    for (int i = 0; i < 150; ++i) {
        auto g = random_graph(rng, {0, 6, 7, true});
        auto h = random_graph(rng, {0, 6, 7, true});
        CHECK(is_isomorphic(g, h) == (brute_canonical(g) == brute_canonical(h)));
        std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
        std::iota(p.begin(), p.end(), 0);
        std::reverse(p.begin(), p.end());
        CHECK(canonical_form(relabel(g, p)) == canonical_form(g));
        auto d = random_digraph(rng, {0, 5, 6, true});
        CHECK(canonical_form(d) == canonical_form(canonical_form(d)));
    }
    // A directed 3-cycle is not isomorphic to a transitive triangle.
    DirectedMultigraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    DirectedMultigraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(is_isomorphic(cyc, tri));
    CHECK(is_isomorphic(cyc, DirectedMultigraph(3, {{1, 0}, {0, 2}, {2, 1}})));
}

TEST_CASE("enumeration lists each class exactly once")
{
    CHECK(enumerate_graphs<false>(4, 3).size() == brute_class_count<false>(4, 3));
    CHECK(enumerate_graphs<false>(3, 4).size() == brute_class_count<false>(3, 4));
    CHECK(enumerate_graphs<true>(3, 3).size() == brute_class_count<true>(3, 3));
    // Hand count: n <= 1 with |E| <= 2 is {empty, K1, loop, two loops}.
    CHECK(enumerate_graphs<false>(1, 2).size() == 4);
    auto all = enumerate_graphs<false>(5, 6);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::pair(a.vertex_count(), a.edge_count()) < std::pair(b.vertex_count(), b.edge_count());
    }));
}

TEST_CASE("labeled gluing identifies equal labels")
{
    LabeledGraph a{graphs::path(2), {0}};
    LabeledGraph b{graphs::path(3), {1}};
    Multigraph glued = glue_labeled(a, b);
    CHECK(glued.vertex_count() == 4);
    CHECK(glued.edge_count() == 3);
    CHECK(glued.max_degree() == 3);
    CHECK_THROWS_AS(glue_labeled(a, LabeledGraph{graphs::path(2), {0, 1}}), PreconditionError);
    CHECK_THROWS_AS((LabeledGraph{graphs::path(2), {0, 0}}.validate()), PreconditionError);
}
