#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace vmodel {

// Finite multigraph on vertices 0..n-1 with loops and parallel edges.
//
// Undirected edges are stored as (u, v) with u <= v; directed arcs as
// (tail, head). The edge list is kept sorted, so two graphs with the same
// labeled edge multiset compare equal.
template <bool Directed>
class BasicMultigraph {
public:
    using Edge = std::pair<int, int>;
    static constexpr bool directed = Directed;

    BasicMultigraph() = default;
    explicit BasicMultigraph(int vertex_count, std::vector<Edge> edges = {});

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    bool empty() const { return n_ == 0; }

    // A loop adds 2 to the degree of its vertex (undirected), or 1 to both
    // the in- and out-degree (directed). degree() is the total.
    int degree(int v) const;
    int in_degree(int v) const;
    int out_degree(int v) const;
    std::vector<int> degrees() const;
    int max_degree() const;
    int loop_count(int v) const;

    friend bool operator==(const BasicMultigraph&, const BasicMultigraph&) = default;
    friend auto operator<=>(const BasicMultigraph&, const BasicMultigraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

using Multigraph = BasicMultigraph<false>;
using DirectedMultigraph = BasicMultigraph<true>;

// A partial map s: U -> V given by a strictly increasing pin list U and an
// aligned target list.
class PinMap {
public:
    PinMap() = default;
    PinMap(std::vector<int> pins, std::vector<int> targets);

    std::size_t size() const { return pins_.size(); }
    std::span<const int> pins() const { return pins_; }
    std::span<const int> targets() const { return targets_; }

    // True if some target is itself a pin.
    bool targets_meet_pins() const;

    // Throws PreconditionError unless every pin and target is in [0, n).
    void validate(int vertex_count) const;

    // s o pi, where pi permutes the pin positions: result target i is
    // target perm[i].
    PinMap permuted(std::span<const int> perm) const;

    friend bool operator==(const PinMap&, const PinMap&) = default;

private:
    std::vector<int> pins_;
    std::vector<int> targets_;
};

// Whether contraction accepts targets inside the pin set. Only tests and
// the 2^|V| overlap check need the overlap variant.
enum class TargetPolicy { require_disjoint, allow_overlap };

// Renames vertex v to perm[v]; perm must be a permutation of 0..n-1.
template <bool D>
BasicMultigraph<D> relabel(const BasicMultigraph<D>& g, std::span<const int> perm);

template <bool D>
BasicMultigraph<D> disjoint_union(const BasicMultigraph<D>& g, const BasicMultigraph<D>& h);

// G_s: adds the edge {u, s(u)} (arc (u, s(u)) when directed) for every pin.
template <bool D>
BasicMultigraph<D> add_pins(const BasicMultigraph<D>& g, const PinMap& pins);

// G/s: merges every pin u with s(u) and keeps the original edges, which
// become loops or parallels as forced. Merged classes are numbered by their
// smallest original vertex.
template <bool D>
BasicMultigraph<D> contract_pins(const BasicMultigraph<D>& g, const PinMap& pins,
                                 TargetPolicy policy = TargetPolicy::require_disjoint);

// Hangs a fresh vertex u' off every pin u and moves the pins onto those
// vertices, so that contract_pins(result) == add_pins(g, pins).
template <bool D>
std::pair<BasicMultigraph<D>, PinMap> pendant_reduction(const BasicMultigraph<D>& g, const PinMap& pins);

// Exhaustive isomorphism classes with 0..max_vertices vertices and at most
// max_edges edges, as canonical forms sorted by (n, |E|, edges).
template <bool D>
std::vector<BasicMultigraph<D>> enumerate_graphs(int max_vertices, int max_edges);

// Simple builders used throughout tests and the CLI.
namespace graphs {
Multigraph edgeless(int n);
Multigraph path(int n);
Multigraph cycle(int n);     // n >= 1; cycle(1) is a loop, cycle(2) a double edge
Multigraph complete(int n);
Multigraph loops(int n, int loops_per_vertex);
} // namespace graphs

// Graph with an injective map from labels 1..l (stored 0-based) to vertices.
struct LabeledGraph {
    Multigraph graph;
    std::vector<int> labels;

    void validate() const;
    int label_count() const { return static_cast<int>(labels.size()); }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
    friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;
};

// Disjoint union with equally labeled vertices identified.
Multigraph glue_labeled(const LabeledGraph& g, const LabeledGraph& h);

} // namespace vmodel
