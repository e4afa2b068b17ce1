#include <doctest.h>

#include "vmodel/error.hpp"
#include "vmodel/partition.hpp"
#include "vmodel/random.hpp"

#include <numeric>

using namespace vmodel;

namespace {

// Sum over colorings written from the definition, independent of the
// library's brute force.
Scalar by_definition(const Multigraph& g, const VertexModel& y)
{
    const int k = y.colors();
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    if (m > 0 && k == 0)
        return Scalar(0);
    std::size_t total = 1;
    for (std::size_t e = 0; e < m; ++e)
        total *= static_cast<std::size_t>(k);
    Scalar sum = Scalar::zero(y.ring());
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::vector<int>> counts(static_cast<std::size_t>(g.vertex_count()),
                                             std::vector<int>(static_cast<std::size_t>(k), 0));
        std::size_t c = code;
        for (auto [u, v] : edges) {
            int color = static_cast<int>(c % static_cast<std::size_t>(k));
            c /= static_cast<std::size_t>(k);
            ++counts[u][color];
            ++counts[v][color];
        }
        Scalar term = Scalar::one(y.ring());
        for (auto& cv : counts)
            term *= y.value(MultisetIndex(cv));
        sum += term;
    }
    return sum;
}

std::int64_t matchings(const Multigraph& g)
{
    const auto edges = g.edges();
    std::int64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << edges.size()); ++mask) {
        std::vector<int> hit(static_cast<std::size_t>(g.vertex_count()), 0);
        bool ok = true;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (mask >> e & 1) {
                ok = ok && edges[e].first != edges[e].second;
                ok = ok && ++hit[edges[e].first] == 1 && ++hit[edges[e].second] == 1;
            }
        count += ok;
    }
    return count;
}

} // namespace

TEST_CASE("matching model counts matchings")
{
    CHECK(partition(graphs::path(3), models::matching(2)) == Scalar(3));
    Multigraph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(partition(triangles, models::matching(2)) == Scalar(16));
    CHECK(partition(graphs::path(2), models::matching(1)) == Scalar(2));
    // K4 has 1 + 6 + 3 matchings.
    CHECK(partition(graphs::complete(4), models::matching(3), PartitionMethod::brute) == Scalar(10));
    Rng rng(2);
    for (int i = 0; i < 60; ++i) {
        auto g = random_graph(rng, {0, 6, 8, true});
        CHECK(partition(g, models::matching(g.max_degree())) == Scalar(matchings(g)));
    }
}

TEST_CASE("sign model gives (-1)^|E|")
{
    Rng rng(4);
    for (int i = 0; i < 60; ++i) {
        auto g = random_graph(rng, {0, 6, 8, true});
        Scalar expected = Scalar::gaussian(g.edge_count() % 2 ? -1 : 1);
        CHECK(partition(g, models::sign(g.max_degree())) == expected);
        CHECK(partition(g, models::sign(g.max_degree()), PartitionMethod::brute) == expected);
    }
}

TEST_CASE("closed forms")
{
    // Constant-1 model with k colors counts all k^|E| colorings.
    auto g = graphs::complete(4);
    CHECK(partition(g, models::constant(3, Scalar(1), 3)) == Scalar(729));
    // A loop shows its color twice: one vertex, one loop, y = (1, 0, 5).
    VertexModel y(1, Ring::rational, {{MultisetIndex({0}), Scalar(1)}, {MultisetIndex({2}), Scalar(5)}});
    CHECK(partition(graphs::cycle(1), y) == Scalar(5));
    // k = 0: empty sum with edges, y_()^n without.
    VertexModel z(0, Ring::rational, {{MultisetIndex::zero(0), Scalar(3)}});
    CHECK(partition(graphs::edgeless(4), z) == Scalar(81));
    CHECK(partition(graphs::path(2), z).is_zero());
    CHECK(partition(Multigraph(), models::matching(0)).is_one());
}

TEST_CASE("contraction matches the definition on random instances")
{
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto g = random_graph(rng, {0, 6, 7, true});
        int k = static_cast<int>(rng.uniform(0, 3));
        auto y = random_model(rng, k, i % 2 ? Ring::gaussian : Ring::rational, g.max_degree(), i % 3 == 0);
        Scalar expected = by_definition(g, y);
        CHECK(partition_contract(g, y) == expected);
        CHECK(partition_brute(g, y) == expected);
    }
}

TEST_CASE("large integer entries leave the machine-word path exactly")
{
    // Entries near 2^24 overflow 64-bit products on a few vertices.
    VertexModel y(1, Ring::rational, {{MultisetIndex({0}), Scalar(1)}, {MultisetIndex({2}), Scalar((1 << 24) - 1)}});
    auto g = graphs::cycle(5);
    Scalar expected = pow(Scalar((1 << 24) - 1), 5);
    CHECK(partition_contract(g, y) == expected);
    VertexModel w(2, Ring::rational,
                  {{MultisetIndex({2, 0}), Scalar((1 << 23) + 1)}, {MultisetIndex({1, 1}), Scalar(-(1 << 23))},
                   {MultisetIndex({0, 2}), Scalar(7)}});
    auto h = graphs::cycle(6);
    CHECK(partition_contract(h, w) == by_definition(h, w));
}

TEST_CASE("elimination orders")
{
    Rng rng(8);
    auto g = random_graph(rng, {4, 6, 8, true});
    auto y = random_model(rng, 2, Ring::rational, g.max_degree());
    std::vector<int> order(g.edge_count());
    std::iota(order.rbegin(), order.rend(), 0);
    CHECK(partition_contract(g, y, order) == partition_contract(g, y));
    CHECK(partition_contract(g, y, std::vector<int>{}) == partition_contract(g, y));
    CHECK_THROWS_AS(partition_contract(g, y, std::vector<int>{0, 0}), PreconditionError);
    CHECK_THROWS_AS(partition_contract(g, y, std::vector<int>{static_cast<int>(g.edge_count())}), PreconditionError);
}

TEST_CASE("caps raise errors instead of truncating")
{
    auto y = models::constant(2, Scalar(1), 10);
    CHECK_THROWS_AS(partition_brute(graphs::complete(5), y, {5, 8}), CapExceeded);
    // Loops are traced inside the vertex tensor and open no legs.
    CHECK(partition_contract(graphs::loops(1, 5), y, std::nullopt, {16, 1}) == Scalar(32));
    // The hub of a 9-leaf star opens 9 legs.
    std::vector<Multigraph::Edge> spokes;
    for (int v = 1; v < 10; ++v)
        spokes.emplace_back(0, v);
    Multigraph star(10, spokes);
    CHECK_THROWS_AS(partition_contract(star, y, std::nullopt, {16, 8}), CapExceeded);
    CHECK(partition_contract(star, y, std::nullopt, {16, 9}) == Scalar(512));
    // Model degree cap below the graph's maximum degree.
    CHECK_THROWS_AS(partition(graphs::complete(4), models::constant(1, Scalar(1), 2)), PreconditionError);
}

TEST_CASE("directed partition functions")
{
    // y_{in, out} = 2^in 3^out is rank one: f = 6^|A|.
    std::map<std::pair<MultisetIndex, MultisetIndex>, Scalar> entries;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            entries[{MultisetIndex({a}), MultisetIndex({b})}] = pow(Scalar(2), a) * pow(Scalar(3), b);
    DirectedVertexModel y(1, Ring::rational, entries, 4);
    DirectedMultigraph g(2, {{0, 1}, {1, 1}});
    CHECK(directed_partition(g, y) == Scalar(36));
    CHECK(directed_partition(g, y, PartitionMethod::brute) == Scalar(36));
    // A loop is one in-end and one out-end: y_{(1),(1)} alone.
    DirectedVertexModel l(1, Ring::rational, {{{MultisetIndex({1}), MultisetIndex({1})}, Scalar(5)}});
    CHECK(directed_partition(DirectedMultigraph(1, {{0, 0}}), l) == Scalar(5));
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        auto d = random_digraph(rng, {0, 5, 6, true});
        auto z = random_directed_model(rng, static_cast<int>(rng.uniform(1, 2)), Ring::gaussian, d.max_degree());
        CHECK(directed_partition_contract(d, z) == directed_partition_brute(d, z));
    }
}

TEST_CASE("multiplicativity witness")
{
    Rng rng(29);
    for (int i = 0; i < 50; ++i) {
        auto g = random_graph(rng, {0, 4, 5, true});
        auto h = random_graph(rng, {0, 4, 5, true});
        auto y = random_model(rng, 2, Ring::rational, std::max(g.max_degree(), h.max_degree()));
        auto w = multiplicativity_witness(g, h, y);
        CHECK(w.joint == w.left * w.right);
    }
}
