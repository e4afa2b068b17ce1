#include "vmodel/checks.hpp"

#include "vmodel/connection.hpp"
#include "vmodel/error.hpp"
#include "vmodel/io.hpp"
#include "vmodel/isomorphism.hpp"
#include "vmodel/linalg.hpp"
#include "vmodel/model.hpp"
#include "vmodel/permutations.hpp"
#include "vmodel/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace vmodel::checks {

namespace {

// Records the first failure and counts instances.
class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void pass() { ++result_.instances; }
    void check(bool ok, const std::string& what)
    {
        ++result_.instances;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }
    void note(std::string detail)
    {
        if (result_.passed)
            result_.detail = std::move(detail);
    }
    bool failed() const { return !result_.passed; }
    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

template <bool D>
std::string describe(const BasicMultigraph<D>& g)
{
    return graph_json(g).dump();
}

std::vector<int> random_permutation(Rng& rng, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.uniform(0, i))]);
    return p;
}

// Brute-force isomorphism over all vertex bijections (n <= 7).
template <bool D>
bool isomorphic_by_permutations(const BasicMultigraph<D>& g, const BasicMultigraph<D>& h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (relabel(g, p) == h)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Plain fraction Gaussian elimination, independent of the Bareiss code.
std::size_t naive_rank(ScalarMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, c).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(pivot, j), m(rank, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero())
                continue;
            Scalar factor = m(i, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

int needed_degree(const Multigraph& g)
{
    return g.max_degree();
}

// A union of cycles and loops, so that the counterexample is nonzero.
Multigraph random_two_regular(Rng& rng)
{
    Multigraph g;
    int parts = static_cast<int>(rng.uniform(0, 2));
    for (int i = 0; i < parts; ++i)
        g = disjoint_union(g, graphs::cycle(static_cast<int>(rng.uniform(1, 4))));
    return g;
}

Ring random_ring(Rng& rng)
{
    return rng.coin(1, 2) ? Ring::gaussian : Ring::rational;
}

// Number of matchings (sets of pairwise disjoint non-loop edges).
std::int64_t count_matchings(const Multigraph& g)
{
    const auto edges = g.edges();
    std::int64_t count = 0;
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (!(mask >> e & 1))
                continue;
            auto [u, v] = edges[e];
            if (u == v || used[u] || used[v])
                ok = false;
            used[u] = used[v] = true;
        }
        if (ok)
            ++count;
    }
    return count;
}

template <bool D>
PinMap transposed(const PinMap& p, std::size_t i, std::size_t j)
{
    std::vector<int> t(p.targets().begin(), p.targets().end());
    std::swap(t[i], t[j]);
    return PinMap(std::vector<int>(p.pins().begin(), p.pins().end()), std::move(t));
}

} // namespace

// ---------------------------------------------------------------- graph-core

CheckResult canonical_forms(std::uint64_t seed, SearchBounds bounds, bool directed, int samples)
{
    Tally t(directed ? "graph.canonical-forms-directed" : "graph.canonical-forms");
    Rng rng(seed);
    auto run = [&](auto tag) {
        constexpr bool D = decltype(tag)::value;
        auto all = enumerate_graphs<D>(bounds.max_vertices, bounds.max_edges);
        std::set<BasicMultigraph<D>> distinct(all.begin(), all.end());
        t.check(distinct.size() == all.size(), "enumeration returned a repeated canonical form");
        for (const auto& g : all) {
            t.check(canonical_form(g) == g, "canonical form not idempotent on " + describe(g));
            auto h = relabel(g, random_permutation(rng, g.vertex_count()));
            t.check(canonical_form(h) == g, "relabeling changed the canonical form of " + describe(g));
            t.check(is_isomorphic(g, h), "graph not isomorphic to its relabeling: " + describe(g));
            if (t.failed())
                return;
        }
        // Cross-check against exhaustive bijection search on random pairs
        // with equal vertex and edge counts.
        for (int i = 0; i < samples && !all.empty(); ++i) {
            const auto& g = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
            const auto& h = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
            auto hr = relabel(h, random_permutation(rng, h.vertex_count()));
            bool expect = isomorphic_by_permutations(g, hr);
            t.check(is_isomorphic(g, hr) == expect, "isomorphism test disagrees with bijection search on " +
                                                        describe(g) + " and " + describe(hr));
            t.check(expect == (g == h), "distinct enumerated classes are isomorphic: " + describe(g));
        }
        t.note(std::to_string(all.size()) + " classes");
    };
    if (directed)
        run(std::true_type{});
    else
        run(std::false_type{});
    return t.done();
}

CheckResult union_laws(std::uint64_t seed, int count)
{
    Tally t("graph.union-laws");
    Rng rng(seed);
    GraphShape shape{0, 4, 5, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        auto h = random_graph(rng, shape);
        auto k = random_graph(rng, shape);
        t.check(is_isomorphic(disjoint_union(g, h), disjoint_union(h, g)),
                "union not commutative on " + describe(g) + ", " + describe(h));
        t.check(is_isomorphic(disjoint_union(disjoint_union(g, h), k), disjoint_union(g, disjoint_union(h, k))),
                "union not associative on " + describe(g) + ", " + describe(h) + ", " + describe(k));
        auto dg = random_digraph(rng, shape);
        auto dh = random_digraph(rng, shape);
        t.check(is_isomorphic(disjoint_union(dg, dh), disjoint_union(dh, dg)),
                "directed union not commutative on " + describe(dg) + ", " + describe(dh));
    }
    return t.done();
}

CheckResult pendant_reduction_identity(std::uint64_t seed, int count, int max_vertices)
{
    Tally t("graph.pendant-reduction");
    Rng rng(seed);
    GraphShape shape{1, max_vertices, 8, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        auto p = random_pins(rng, g.vertex_count(), static_cast<int>(rng.uniform(0, g.vertex_count())), false);
        auto [reduced, moved] = pendant_reduction(g, p);
        t.check(contract_pins(reduced, moved) == add_pins(g, p), "contract(pendant) != add_pins on " + describe(g));
        auto d = random_digraph(rng, shape);
        auto q = random_pins(rng, d.vertex_count(), static_cast<int>(rng.uniform(0, d.vertex_count())), false);
        auto [dreduced, dmoved] = pendant_reduction(d, q);
        t.check(contract_pins(dreduced, dmoved) == add_pins(d, q),
                "directed contract(pendant) != add_pins on " + describe(d));
    }
    return t.done();
}

CheckResult surgery_degrees(std::uint64_t seed, int count)
{
    Tally t("graph.surgery-degrees");
    Rng rng(seed);
    GraphShape shape{2, 7, 8, true};
    auto degree_sum = [](const auto& g) {
        auto d = g.degrees();
        return std::accumulate(d.begin(), d.end(), 0);
    };
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        const int n = g.vertex_count();
        auto p = random_pins(rng, n, static_cast<int>(rng.uniform(0, n / 2)), true);
        auto pinned = add_pins(g, p);
        auto contracted = contract_pins(g, p);
        t.check(degree_sum(pinned) == 2 * static_cast<int>(pinned.edge_count()), "degree sum after add_pins");
        t.check(degree_sum(contracted) == 2 * static_cast<int>(contracted.edge_count()),
                "degree sum after contract_pins");
        t.check(contracted.edge_count() == g.edge_count(), "contraction changed the edge count");
        // Merges performed by an independent union-find.
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
        int merges = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            int a = find(p.pins()[j]);
            int b = find(p.targets()[j]);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
        t.check(contracted.vertex_count() == n - merges, "contracted vertex count != n - merges on " + describe(g));
    }
    return t.done();
}

// ------------------------------------------------------------------- models

CheckResult moment_symmetry(std::uint64_t seed, int max_colors, int max_degree, int models)
{
    Tally t("models.moment-symmetry");
    Rng rng(seed);
    for (int k = 1; k <= max_colors; ++k) {
        for (int d = 0; d <= max_degree; ++d) {
            for (int i = 0; i < models; ++i) {
                auto y = random_model(rng, k, random_ring(rng), 2 * d);
                auto slice = moment_slice(y, d);
                bool ok = slice.matrix.is_symmetric();
                for (std::size_t a = 0; a < slice.indices.size() && ok; ++a)
                    for (std::size_t b = 0; b < slice.indices.size() && ok; ++b)
                        ok = slice.matrix(a, b) == y.value(slice.indices[a] + slice.indices[b]);
                t.check(ok, "moment slice wrong for k=" + std::to_string(k) + " d=" + std::to_string(d));
            }
        }
    }
    return t.done();
}

CheckResult moment_rank_bound(std::uint64_t seed, int max_rank, int max_colors, int max_degree, int models)
{
    Tally t("models.moment-rank-bound");
    Rng rng(seed);
    for (int r = 1; r <= max_rank; ++r)
        for (int k = 1; k <= max_colors; ++k)
            for (int d = 0; d <= max_degree; ++d)
                for (int i = 0; i < models; ++i) {
                    auto y = random_rank_r_model(rng, k, r, random_ring(rng), 2 * d);
                    std::size_t rank = exact_rank(moment_slice(y, d).matrix);
                    t.check(rank <= static_cast<std::size_t>(r),
                            "rank " + std::to_string(rank) + " > r=" + std::to_string(r) + " (k=" + std::to_string(k) +
                                ", d=" + std::to_string(d) + ")");
                }
    return t.done();
}

CheckResult rank_matches_naive(std::uint64_t seed, int count, int size)
{
    Tally t("models.rank-vs-elimination");
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(size);
    for (int i = 0; i < count && !t.failed(); ++i) {
        Ring ring = random_ring(rng);
        // Low-rank products make rank deficiency common.
        int inner = static_cast<int>(rng.uniform(0, size));
        ScalarMatrix a(n, static_cast<std::size_t>(inner), Scalar::zero(ring));
        ScalarMatrix b(static_cast<std::size_t>(inner), n, Scalar::zero(ring));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < static_cast<std::size_t>(inner); ++c) {
                a(r, c) = random_scalar(rng, ring) + Scalar::zero(ring);
                b(c, r) = random_scalar(rng, ring) + Scalar::zero(ring);
            }
        ScalarMatrix m(n, n, Scalar::zero(ring));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t j = 0; j < static_cast<std::size_t>(inner); ++j)
                    m(r, c) += a(r, j) * b(j, c);
        std::size_t fast = exact_rank(m);
        std::size_t slow = naive_rank(m);
        t.check(fast == slow, "Bareiss rank " + std::to_string(fast) + " != elimination rank " + std::to_string(slow));
    }
    return t.done();
}

CheckResult rank_exact_instances()
{
    Tally t("models.rank-exact-instances");
    // k = 1, points 1..r, unit coefficients: a Hankel matrix of full rank r
    // once the slice is large enough.
    for (int r = 1; r <= 3; ++r) {
        for (int d = r - 1; d <= 3; ++d) {
            std::vector<std::vector<Scalar>> points;
            for (int j = 1; j <= r; ++j)
                points.push_back({Scalar(j)});
            auto y = rank_r_model(1, points, std::vector<Scalar>(static_cast<std::size_t>(r), Scalar(1)), 2 * d);
            std::size_t rank = exact_rank(moment_slice(y, d).matrix);
            t.check(rank == static_cast<std::size_t>(r), "points 1.." + std::to_string(r) + " at d=" +
                                                             std::to_string(d) + " gave rank " + std::to_string(rank));
        }
    }
    // y_d = 1 + 2^d.
    auto y = rank_r_model(1, {{Scalar(1)}, {Scalar(2)}}, {Scalar(1), Scalar(1)}, 4);
    auto slice = moment_slice(y, 2);
    ScalarMatrix expected{{2, 3, 5}, {3, 5, 9}, {5, 9, 17}};
    t.check(slice.matrix == expected, "y_d = 1 + 2^d slice differs from [[2,3,5],[3,5,9],[5,9,17]]");
    t.check(exact_rank(slice.matrix) == 2, "y_d = 1 + 2^d slice does not have rank 2");
    return t.done();
}

// ---------------------------------------------------------------- partition

CheckResult engine_equivalence(std::uint64_t seed, int count, const GraphShape& shape, int max_colors,
                               const Config& config)
{
    Tally t("partition.engine-equivalence");
    Rng rng(seed);
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        int k = static_cast<int>(rng.uniform(0, max_colors));
        Ring ring = i % 2 ? Ring::gaussian : Ring::rational;
        auto y = random_model(rng, k, ring, needed_degree(g));
        auto reference = y;
        if (config.inject_fault) {
            std::map<MultisetIndex, Scalar> bumped;
            for (const auto& alpha : graded_indices(k, needed_degree(g)))
                bumped.emplace(alpha, y.value(alpha) + Scalar(1));
            reference = VertexModel(k, ring, std::move(bumped), needed_degree(g));
        }
        Scalar a = partition_contract(g, y, std::nullopt, config.partition);
        Scalar b = partition_brute(g, reference, config.partition);
        t.check(a == b, "contract " + a.to_string() + " != brute " + b.to_string() + " on " + describe(g) +
                            " with k=" + std::to_string(k));
    }
    return t.done();
}

CheckResult directed_engine_equivalence(std::uint64_t seed, int count, const GraphShape& shape, int max_colors,
                                        const Config& config)
{
    Tally t("partition.engine-equivalence-directed");
    Rng rng(seed);
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_digraph(rng, shape);
        int k = static_cast<int>(rng.uniform(0, max_colors));
        Ring ring = i % 2 ? Ring::gaussian : Ring::rational;
        auto y = random_directed_model(rng, k, ring, g.max_degree());
        Scalar a = directed_partition_contract(g, y, std::nullopt, config.partition);
        Scalar b = directed_partition_brute(g, y, config.partition);
        t.check(a == b, "contract " + a.to_string() + " != brute " + b.to_string() + " on " + describe(g));
    }
    return t.done();
}

CheckResult multiplicativity(std::uint64_t seed, int pairs, const GraphShape& shape, const Config& config)
{
    Tally t("partition.multiplicativity");
    Rng rng(seed);
    for (int i = 0; i < pairs && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        auto h = random_graph(rng, shape);
        int k = static_cast<int>(rng.uniform(1, 3));
        auto y = random_model(rng, k, random_ring(rng), std::max(g.max_degree(), h.max_degree()));
        Scalar fg = partition_contract(g, y, std::nullopt, config.partition);
        Scalar fh = partition_contract(h, y, std::nullopt, config.partition);
        Scalar joint = partition_contract(disjoint_union(g, h), y, std::nullopt, config.partition);
        t.check(joint == fg * fh, "f(G+H) != f(G) f(H) on " + describe(g) + ", " + describe(h));
        t.check(partition_contract(Multigraph(), y).is_one(), "f(empty) != 1");
    }
    return t.done();
}

CheckResult named_models(std::uint64_t seed, int graphs, const Config& config)
{
    Tally t("partition.named-models");
    Rng rng(seed);
    // Matching model against direct enumeration of matchings.
    t.check(partition(graphs::path(3), models::matching(2)) == Scalar(3), "matching model on P3 != 3");
    auto triangles = disjoint_union(graphs::cycle(3), graphs::cycle(3));
    t.check(partition(triangles, models::matching(2)) == Scalar(16), "matching model on two triangles != 16");
    GraphShape shape{0, 6, 8, true};
    for (int i = 0; i < graphs && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        Scalar m = partition_contract(g, models::matching(g.max_degree()), std::nullopt, config.partition);
        t.check(m == Scalar(count_matchings(g)), "matching model " + m.to_string() + " != matching count on " +
                                                     describe(g));
        Scalar s = partition_contract(g, models::sign(g.max_degree()), std::nullopt, config.partition);
        Scalar expected = g.edge_count() % 2 ? Scalar::gaussian(-1) : Scalar::gaussian(1);
        t.check(s == expected, "sign model " + s.to_string() + " != (-1)^|E| on " + describe(g));
    }
    return t.done();
}

CheckResult isomorphism_invariance(std::uint64_t seed, int count, const Config& config)
{
    Tally t("partition.isomorphism-invariance");
    Rng rng(seed);
    GraphShape shape{0, 6, 8, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        auto h = relabel(g, random_permutation(rng, g.vertex_count()));
        auto y = random_model(rng, static_cast<int>(rng.uniform(1, 3)), random_ring(rng), g.max_degree());
        t.check(partition_contract(g, y, std::nullopt, config.partition) ==
                    partition_contract(h, y, std::nullopt, config.partition),
                "relabeling changed f on " + describe(g));
    }
    return t.done();
}

CheckResult zero_colors(std::uint64_t seed, int count)
{
    Tally t("partition.zero-colors");
    Rng rng(seed);
    GraphShape shape{0, 6, 6, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        Scalar c = random_scalar(rng, Ring::rational);
        VertexModel y(0, Ring::rational, {{MultisetIndex::zero(0), c}});
        Scalar expected = g.edge_count() > 0 ? Scalar(0) : pow(c, static_cast<unsigned>(g.vertex_count()));
        t.check(partition_brute(g, y) == expected && partition_contract(g, y) == expected,
                "k = 0 convention violated on " + describe(g));
    }
    return t.done();
}

CheckResult order_independence(std::uint64_t seed, int count, const Config& config)
{
    Tally t("partition.order-independence");
    Rng rng(seed);
    GraphShape shape{1, 6, 8, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        auto y = random_model(rng, static_cast<int>(rng.uniform(2, 3)), random_ring(rng), g.max_degree());
        Scalar greedy = partition_contract(g, y, std::nullopt, config.partition);
        auto order = random_permutation(rng, static_cast<int>(g.edge_count()));
        order.resize(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(order.size()))));
        Scalar given;
        try {
            given = partition_contract(g, y, order, config.partition);
        } catch (const CapExceeded&) {
            t.pass(); // a bad order may be too wide; that is not a disagreement
            continue;
        }
        t.check(greedy == given, "elimination order changed f on " + describe(g));
    }
    return t.done();
}

// ------------------------------------------------------------------ certify

namespace {

template <bool D>
std::string witness_text(const BasicWitness<D>& w)
{
    return witness_json(w).dump();
}

int sum_degree_cap(const SearchBounds& b, int pins)
{
    // Worst vertex degree in a pinned or contracted graph: every edge a loop
    // at one vertex, plus one end per pin.
    return 2 * (b.max_edges + pins);
}

} // namespace

CheckResult pin_sums(std::uint64_t seed, const ExhaustiveSpec& spec, bool directed, const Config& config)
{
    Tally t(directed ? "certify.directed-pin-sums" : "certify.pin-sums");
    Rng rng(seed);
    std::size_t graphs = 0;
    std::size_t evaluations = 0;
    for (int k : spec.sizes) {
        for (int i = 0; i < spec.models && !t.failed(); ++i) {
            // Mostly rational models; every fifth one gaussian.
            Ring ring = i % 5 == 4 ? Ring::gaussian : Ring::rational;
            int cap = sum_degree_cap(spec.bounds, k + 1);
            SearchStats stats;
            if (directed) {
                auto f = directed_model_oracle(random_directed_model(rng, k, ring, cap, true), PartitionMethod::contract,
                                               config.partition);
                auto w = search_violation(f, k + 1, spec.bounds, SumMode::pins, config.alt, &stats);
                t.check(!w, w ? "nonzero sum for k=" + std::to_string(k) + ": " + witness_text(*w) : "");
            } else {
                auto f = model_oracle(random_model(rng, k, ring, cap, true), PartitionMethod::contract, config.partition);
                auto w = search_violation(f, k + 1, spec.bounds, SumMode::pins, config.alt, &stats);
                t.check(!w, w ? "nonzero sum for k=" + std::to_string(k) + ": " + witness_text(*w) : "");
            }
            graphs = stats.graphs;
            evaluations += stats.evaluations;
        }
    }
    auto result = t.done();
    if (result.passed)
        result.detail = std::to_string(graphs) + " graphs per model, " + std::to_string(evaluations) + " evaluations";
    return result;
}

CheckResult contraction_sums(std::uint64_t seed, const ExhaustiveSpec& spec, bool directed, const Config& config)
{
    Tally t(directed ? "certify.directed-contraction-sums" : "certify.contraction-sums");
    Rng rng(seed);
    std::size_t evaluations = 0;
    for (int r : spec.sizes) {
        for (int k : spec.colors) {
            for (int i = 0; i < spec.models && !t.failed(); ++i) {
                Ring ring = i % 3 == 2 ? Ring::gaussian : Ring::rational;
                int cap = sum_degree_cap(spec.bounds, r + 1);
                SearchStats stats;
                std::optional<std::string> failure;
                if (directed) {
                    auto joint = random_rank_r_model(rng, 2 * k, r, ring, cap);
                    auto f = directed_model_oracle(DirectedVertexModel::from_joint(joint), PartitionMethod::contract,
                                                   config.partition);
                    auto w = search_violation(f, r + 1, spec.bounds, SumMode::contract, config.alt, &stats);
                    if (w)
                        failure = witness_text(*w);
                } else {
                    auto f = model_oracle(random_rank_r_model(rng, k, r, ring, cap), PartitionMethod::contract,
                                          config.partition);
                    auto w = search_violation(f, r + 1, spec.bounds, SumMode::contract, config.alt, &stats);
                    if (w)
                        failure = witness_text(*w);
                }
                t.check(!failure, failure ? "nonzero sum for r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                                                ": " + *failure
                                          : "");
                evaluations += stats.evaluations;
            }
        }
    }
    auto result = t.done();
    if (result.passed)
        result.detail = std::to_string(evaluations) + " evaluations";
    return result;
}

CheckResult pendant_sums(std::uint64_t seed, int count, const Config& config)
{
    Tally t("certify.pendant-sums");
    Rng rng(seed);
    GraphShape shape{1, 5, 6, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        int u = static_cast<int>(rng.uniform(0, std::min(g.vertex_count(), 3)));
        auto p = random_pins(rng, g.vertex_count(), u, false);
        int k = static_cast<int>(rng.uniform(1, 2));
        ParamOracle f = i % 3 == 0 ? counterexample_oracle()
                                   : model_oracle(random_model(rng, k, random_ring(rng), g.max_degree() + 2 * u),
                                                  PartitionMethod::contract, config.partition);
        auto [pins, contracted] = thm2_implies_thm1_check(f, g, p, config.alt);
        t.check(pins == contracted, "pin sum " + pins.to_string() + " != pendant contraction sum " +
                                        contracted.to_string() + " on " + describe(g));
    }
    return t.done();
}

CheckResult alternation(std::uint64_t seed, int count, const Config& config)
{
    Tally t("certify.alternation");
    Rng rng(seed);
    GraphShape shape{2, 5, 5, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        int u = static_cast<int>(rng.uniform(2, std::min(g.vertex_count(), 4)));
        auto p = random_pins(rng, g.vertex_count(), u, false);
        auto f = model_oracle(random_model(rng, 3, random_ring(rng), g.max_degree() + 2 * u), PartitionMethod::contract,
                              config.partition);
        std::size_t a = static_cast<std::size_t>(rng.uniform(0, u - 1));
        std::size_t b = static_cast<std::size_t>(rng.uniform(0, u - 1));
        if (a == b) {
            t.pass();
            continue;
        }
        Scalar sum = alt_sum_pins(f, g, p, config.alt);
        Scalar swapped = alt_sum_pins(f, g, transposed<false>(p, a, b), config.alt);
        t.check(swapped == -sum, "transposing s did not negate the sum on " + describe(g));
    }
    return t.done();
}

CheckResult counterexample_search(SearchBounds bounds, const Config& config)
{
    Tally t("certify.counterexample-search");
    auto f = counterexample_oracle();
    t.check(f(graphs::cycle(3)) == Scalar(-2), "counterexample on a triangle != -2");
    t.check(f(disjoint_union(graphs::cycle(3), graphs::cycle(3))) == Scalar(4), "two triangles != 4");
    t.check(f(graphs::path(3)).is_zero(), "counterexample on P3 != 0");
    t.check(f(Multigraph()).is_one(), "counterexample on the empty graph != 1");
    auto w = search_violation(f, 2, bounds, SumMode::pins, config.alt);
    t.check(w.has_value(), "no witness with |U| = 2");
    if (w) {
        t.check(!w->value.is_zero() && alt_sum_pins(f, w->graph, w->pins, config.alt) == w->value,
                "witness does not reproduce: " + witness_text(*w));
        t.note("witness " + witness_text(*w));
    }
    return t.done();
}

CheckResult counterexample_multiplicative(std::uint64_t seed, int pairs)
{
    Tally t("certify.counterexample-multiplicative");
    Rng rng(seed);
    std::vector<std::pair<Multigraph, Multigraph>> list;
    for (int i = 0; i < pairs; ++i) {
        auto g = i % 2 ? random_two_regular(rng) : random_graph(rng, {0, 4, 5, true});
        auto h = i % 3 ? random_two_regular(rng) : random_graph(rng, {0, 4, 5, true});
        list.emplace_back(g, h);
    }
    auto f = counterexample_oracle();
    t.check(check_multiplicative(f, list), "counterexample is not multiplicative on the sampled pairs");
    for (std::size_t i = 1; i < list.size(); ++i)
        t.pass();
    return t.done();
}

CheckResult matching_search(SearchBounds bounds, const Config& config)
{
    Tally t("certify.matching-search");
    auto y = models::matching(sum_degree_cap(bounds, 3));
    SearchStats stats;
    auto w = search_violation(model_oracle(y, PartitionMethod::contract, config.partition), 3, bounds, SumMode::pins,
                              config.alt, &stats);
    t.check(!w, w ? "matching model violates the k = 2 identity: " + witness_text(*w) : "");
    auto result = t.done();
    result.instances = stats.instances;
    return result;
}

CheckResult overlap_remark(SearchBounds bounds, const Config& config)
{
    Tally t("certify.overlap-remark");
    // f(G) = 2^|V|, the partition function of a rank-1 one-color model.
    ParamOracle f([](const Multigraph& g) { return pow(Scalar(2), static_cast<unsigned>(g.vertex_count())); },
                  Provenance::builtin, "two-power");
    SearchStats stats;
    auto w = search_violation(f, 2, bounds, SumMode::contract, config.alt, &stats);
    t.check(!w, w ? "2^|V| violates the disjoint r = 1 identity: " + witness_text(*w) : "");
    // Allowing s(U) to meet U breaks the identity.
    bool found = false;
    for (const auto& g : enumerate_graphs<false>(bounds.max_vertices, bounds.max_edges)) {
        const int n = g.vertex_count();
        for (int a = 0; a < n && !found; ++a)
            for (int b = a + 1; b < n && !found; ++b)
                for (int sa = 0; sa < n && !found; ++sa)
                    for (int sb = 0; sb < n && !found; ++sb) {
                        PinMap p({a, b}, {sa, sb});
                        if (!p.targets_meet_pins())
                            continue;
                        found = !alt_sum_contract(f, g, p, TargetPolicy::allow_overlap, config.alt).is_zero();
                    }
        if (found)
            break;
    }
    t.check(found, "no overlapping instance breaks the identity for 2^|V|");
    auto result = t.done();
    result.instances += stats.instances;
    return result;
}

// ----------------------------------------------------------------- symbolic

CheckResult polynomial_homomorphism(std::uint64_t seed, int pairs)
{
    Tally t("symbolic.homomorphism");
    Rng rng(seed);
    GraphShape shape{0, 3, 3, true};
    for (int i = 0; i < pairs && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        auto h = random_graph(rng, shape);
        int k = static_cast<int>(rng.uniform(1, 2));
        t.check(p_poly(disjoint_union(g, h), k) == p_poly(g, k) * p_poly(h, k),
                "p(G+H) != p(G) p(H) on " + describe(g) + ", " + describe(h));
    }
    return t.done();
}

CheckResult polynomial_evaluation(std::uint64_t seed, int count)
{
    Tally t("symbolic.evaluation");
    Rng rng(seed);
    GraphShape shape{0, 4, 5, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        auto g = random_graph(rng, shape);
        int k = static_cast<int>(rng.uniform(0, 3));
        auto y = random_model(rng, k, random_ring(rng), g.max_degree());
        t.check(evaluate(p_poly(g, k), y) == partition_brute(g, y), "evaluate(p(G), y) != f_y(G) on " + describe(g));
    }
    return t.done();
}

CheckResult kernel_containment(SearchBounds bounds, int colors, const Config& config)
{
    Tally t("symbolic.kernel-containment");
    const int u = colors + 1;
    for (const auto& g : enumerate_graphs<false>(bounds.max_vertices, bounds.max_edges)) {
        const int n = g.vertex_count();
        if (n < u)
            continue;
        for_each_subset(n, u, [&](std::span<const int> pins) {
            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            for_each_tuple(all, u, [&](std::span<const int> targets) {
                if (t.failed())
                    return;
                PinMap p(std::vector<int>(pins.begin(), pins.end()), std::vector<int>(targets.begin(), targets.end()));
                auto q = kernel_generator_pins(g, p, config.alt.max_pins);
                t.check(p_quantum(q, colors, config.partition).is_zero(),
                        "p of a kernel generator is nonzero on " + describe(g));
            });
        });
        if (t.failed())
            break;
    }
    return t.done();
}

CheckResult diagram_commutes(int max_vertices, int max_degree, int max_colors)
{
    Tally t("symbolic.diagram");
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<XVar> vars;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                vars.push_back(make_xvar(i, j));
        // Monomials as nondecreasing variable sequences of length <= max_degree.
        std::vector<int> seq;
        std::function<void(int)> visit = [&](int from) {
            std::vector<std::pair<XVar, int>> factors;
            for (int v : seq)
                factors.emplace_back(vars[static_cast<std::size_t>(v)], 1);
            XPolynomial q;
            q.add_term(XPolynomial::make_monomial(std::move(factors)), Scalar(1));
            for (int k = 0; k <= max_colors; ++k) {
                auto sides = diagram_sides(q, k, n);
                t.check(sides.commutes(), "p(mu(q)) != sigma(tau(q)) for q = " + to_string(q) + ", k = " +
                                              std::to_string(k) + ", n = " + std::to_string(n));
            }
            if (static_cast<int>(seq.size()) == max_degree)
                return;
            for (int v = from; v < static_cast<int>(vars.size()); ++v) {
                seq.push_back(v);
                visit(v);
                seq.pop_back();
            }
        };
        visit(0);
    }
    return t.done();
}

CheckResult quantum_relabeling(std::uint64_t seed, int count)
{
    Tally t("symbolic.quantum-relabeling");
    Rng rng(seed);
    GraphShape shape{0, 5, 6, true};
    for (int i = 0; i < count && !t.failed(); ++i) {
        QuantumGraph a;
        QuantumGraph b;
        for (int j = 0; j < 3; ++j) {
            auto g = random_graph(rng, shape);
            Scalar c = random_scalar(rng, Ring::rational);
            a.add(g, c);
            b.add(relabel(g, random_permutation(rng, g.vertex_count())), c);
        }
        t.check(a == b, "relabeled quantum graph differs");
    }
    return t.done();
}

// --------------------------------------------------------------- connection

CheckResult slice_symmetry(std::uint64_t seed, int models)
{
    Tally t("connection.slice-symmetry");
    Rng rng(seed);
    for (int l = 0; l <= 2; ++l) {
        auto family = enumerate_labeled(l, 1, 2);
        for (std::size_t i = 0; i < family.members.size(); ++i)
            for (std::size_t j = 0; j < family.members.size(); ++j)
                t.check(is_isomorphic(glue_labeled(family.members[i], family.members[j]),
                                      glue_labeled(family.members[j], family.members[i])),
                        "glue(G, H) not isomorphic to glue(H, G)");
        for (int m = 0; m < models; ++m) {
            auto y = random_model(rng, static_cast<int>(rng.uniform(1, 2)), random_ring(rng), 12);
            t.check(connection_slice(model_oracle(y), family).is_symmetric(), "model slice not symmetric");
        }
        t.check(connection_slice(counterexample_oracle(), family).is_symmetric(), "counterexample slice not symmetric");
    }
    return t.done();
}

CheckResult slice_monotonicity(std::uint64_t seed, int models)
{
    Tally t("connection.slice-monotonicity");
    Rng rng(seed);
    auto family = enumerate_labeled(1, 2, 2);
    for (int m = 0; m < models && !t.failed(); ++m) {
        auto y = random_model(rng, static_cast<int>(rng.uniform(1, 2)), Ring::rational, 12, true);
        auto full = connection_slice(model_oracle(y), family);
        std::size_t full_rank = exact_rank(full);
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < family.members.size(); ++i)
            if (rng.coin(1, 2))
                subset.push_back(i);
        t.check(exact_rank(full.submatrix(subset, subset)) <= full_rank, "principal submatrix has larger rank");
    }
    return t.done();
}

CheckResult connection_rank_bounds(std::uint64_t seed, int max_rank, int max_labels, int max_extra, int max_edges,
                                   int models)
{
    Tally t("connection.rank-bound");
    Rng rng(seed);
    std::ostringstream ranks;
    for (int l = 0; l <= max_labels; ++l) {
        auto family = enumerate_labeled(l, max_extra, max_edges);
        for (int r = 1; r <= max_rank; ++r) {
            for (int m = 0; m < models && !t.failed(); ++m) {
                int k = static_cast<int>(rng.uniform(1, 2));
                // Glued graphs have at most 2 * max_edges edges.
                auto y = random_rank_r_model(rng, k, r, Ring::rational, 4 * max_edges);
                auto check = rank_bound_check(y, r, family);
                t.check(check.ok, "rank " + std::to_string(check.rank) + " > r^l = " + std::to_string(check.bound) +
                                      " (l=" + std::to_string(l) + ", r=" + std::to_string(r) + ")");
                if (m == 0)
                    ranks << " l=" << l << ",r=" << r << ":" << check.rank << "/" << family.members.size();
            }
        }
    }
    t.note("rank/family size" + ranks.str());
    return t.done();
}

CheckResult counterexample_slice(int max_extra, int max_edges, std::size_t bound)
{
    Tally t("connection.counterexample-slice");
    auto family = enumerate_labeled(1, max_extra, max_edges);
    std::size_t rank = exact_rank(connection_slice(counterexample_oracle(), family));
    t.check(rank <= bound, "slice rank " + std::to_string(rank) + " exceeds " + std::to_string(bound));
    t.note("rank " + std::to_string(rank) + " on " + std::to_string(family.members.size()) + " labeled graphs");
    return t.done();
}

} // namespace vmodel::checks
