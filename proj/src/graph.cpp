#include "vmodel/graph.hpp"

#include "vmodel/error.hpp"
#include "vmodel/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace vmodel {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Keeps the smaller root so that roots are class minima.
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<int> parent_;
};

// Maps every vertex to the index of its class, classes ordered by their
// smallest member.
std::pair<int, std::vector<int>> class_numbering(UnionFind& uf, int n)
{
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> result(static_cast<std::size_t>(n));
    int count = 0;
    for (int v = 0; v < n; ++v) {
        int root = uf.find(v);
        if (index[root] < 0)
            index[root] = count++;
        result[v] = index[root];
    }
    return {count, result};
}

} // namespace

template <bool D>
BasicMultigraph<D>::BasicMultigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges))
{
    if (n_ < 0)
        throw PreconditionError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") with n = " + std::to_string(n_));
        if (!D && v < u)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

template <bool D>
int BasicMultigraph<D>::degree(int v) const
{
    int d = 0;
    for (auto [a, b] : edges_)
        d += (a == v) + (b == v);
    return d;
}

template <bool D>
int BasicMultigraph<D>::in_degree(int v) const
{
    int d = 0;
    for (auto [a, b] : edges_)
        d += D ? (b == v) : (a == v) + (b == v);
    return d;
}

template <bool D>
int BasicMultigraph<D>::out_degree(int v) const
{
    int d = 0;
    for (auto [a, b] : edges_)
        d += D ? (a == v) : (a == v) + (b == v);
    return d;
}

template <bool D>
std::vector<int> BasicMultigraph<D>::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (auto [a, b] : edges_) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

template <bool D>
int BasicMultigraph<D>::max_degree() const
{
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

template <bool D>
int BasicMultigraph<D>::loop_count(int v) const
{
    int c = 0;
    for (auto [a, b] : edges_)
        c += (a == v && b == v);
    return c;
}

PinMap::PinMap(std::vector<int> pins, std::vector<int> targets)
    : pins_(std::move(pins)), targets_(std::move(targets))
{
    if (pins_.size() != targets_.size())
        throw PreconditionError("pin list and target list differ in length");
    for (std::size_t i = 1; i < pins_.size(); ++i)
        if (pins_[i - 1] >= pins_[i])
            throw PreconditionError("pins must be strictly increasing");
}

bool PinMap::targets_meet_pins() const
{
    return std::any_of(targets_.begin(), targets_.end(),
                       [&](int t) { return std::binary_search(pins_.begin(), pins_.end(), t); });
}

void PinMap::validate(int vertex_count) const
{
    auto bad = [&](int v) { return v < 0 || v >= vertex_count; };
    if (std::any_of(pins_.begin(), pins_.end(), bad) || std::any_of(targets_.begin(), targets_.end(), bad))
        throw PreconditionError("pin or target out of range for a graph with " +
                                std::to_string(vertex_count) + " vertices");
}

PinMap PinMap::permuted(std::span<const int> perm) const
{
    if (perm.size() != pins_.size())
        throw PreconditionError("permutation size does not match pin count");
    PinMap r;
    r.pins_ = pins_;
    r.targets_.resize(targets_.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        r.targets_[i] = targets_[static_cast<std::size_t>(perm[i])];
    return r;
}

template <bool D>
BasicMultigraph<D> relabel(const BasicMultigraph<D>& g, std::span<const int> perm)
{
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw PreconditionError("relabeling has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw PreconditionError("relabeling is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<typename BasicMultigraph<D>::Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return BasicMultigraph<D>(n, std::move(edges));
}

template <bool D>
BasicMultigraph<D> disjoint_union(const BasicMultigraph<D>& g, const BasicMultigraph<D>& h)
{
    std::vector<typename BasicMultigraph<D>::Edge> edges(g.edges().begin(), g.edges().end());
    int shift = g.vertex_count();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + shift, v + shift);
    return BasicMultigraph<D>(g.vertex_count() + h.vertex_count(), std::move(edges));
}

template <bool D>
BasicMultigraph<D> add_pins(const BasicMultigraph<D>& g, const PinMap& pins)
{
    pins.validate(g.vertex_count());
    std::vector<typename BasicMultigraph<D>::Edge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t i = 0; i < pins.size(); ++i)
        edges.emplace_back(pins.pins()[i], pins.targets()[i]);
    return BasicMultigraph<D>(g.vertex_count(), std::move(edges));
}

template <bool D>
BasicMultigraph<D> contract_pins(const BasicMultigraph<D>& g, const PinMap& pins, TargetPolicy policy)
{
    pins.validate(g.vertex_count());
    if (policy == TargetPolicy::require_disjoint && pins.targets_meet_pins())
        throw PreconditionError("contraction requires s(U) and U to be disjoint");
    UnionFind uf(g.vertex_count());
    for (std::size_t i = 0; i < pins.size(); ++i)
        uf.unite(pins.pins()[i], pins.targets()[i]);
    auto [count, cls] = class_numbering(uf, g.vertex_count());
    std::vector<typename BasicMultigraph<D>::Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edges.emplace_back(cls[u], cls[v]);
    return BasicMultigraph<D>(count, std::move(edges));
}

template <bool D>
std::pair<BasicMultigraph<D>, PinMap> pendant_reduction(const BasicMultigraph<D>& g, const PinMap& pins)
{
    pins.validate(g.vertex_count());
    int n = g.vertex_count();
    std::vector<typename BasicMultigraph<D>::Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<int> new_pins;
    std::vector<int> new_targets(pins.targets().begin(), pins.targets().end());
    for (std::size_t i = 0; i < pins.size(); ++i) {
        int fresh = n + static_cast<int>(i);
        // Orientation u -> u' so that contracting (u', s(u)) leaves the arc
        // (u, s(u)) of the directed G_s.
        edges.emplace_back(pins.pins()[i], fresh);
        new_pins.push_back(fresh);
    }
    return {BasicMultigraph<D>(n + static_cast<int>(pins.size()), std::move(edges)),
            PinMap(std::move(new_pins), std::move(new_targets))};
}

template <bool D>
std::vector<BasicMultigraph<D>> enumerate_graphs(int max_vertices, int max_edges)
{
    using G = BasicMultigraph<D>;
    std::vector<G> all;
    for (int n = 0; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = D ? 0 : u; v < n; ++v)
                slots.emplace_back(u, v);
        std::set<G> level{G(n)};
        for (int m = 0;; ++m) {
            all.insert(all.end(), level.begin(), level.end());
            if (m == max_edges || slots.empty())
                break;
            std::set<G> next;
            for (const G& g : level) {
                for (auto slot : slots) {
                    std::vector<typename G::Edge> edges(g.edges().begin(), g.edges().end());
                    edges.push_back(slot);
                    next.insert(canonical_form(G(n, std::move(edges))));
                }
            }
            level = std::move(next);
        }
    }
    return all;
}

namespace graphs {

Multigraph edgeless(int n)
{
    return Multigraph(n);
}

Multigraph path(int n)
{
    std::vector<Multigraph::Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Multigraph(n, std::move(e));
}

Multigraph cycle(int n)
{
    if (n < 1)
        throw PreconditionError("cycle needs at least one vertex");
    std::vector<Multigraph::Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Multigraph(n, std::move(e));
}

Multigraph complete(int n)
{
    std::vector<Multigraph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Multigraph(n, std::move(e));
}

Multigraph loops(int n, int loops_per_vertex)
{
    std::vector<Multigraph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < loops_per_vertex; ++j)
            e.emplace_back(i, i);
    return Multigraph(n, std::move(e));
}

} // namespace graphs

void LabeledGraph::validate() const
{
    std::vector<int> seen(labels);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw PreconditionError("label map is not injective");
    for (int v : labels)
        if (v < 0 || v >= graph.vertex_count())
            throw PreconditionError("label points outside the graph");
}

Multigraph glue_labeled(const LabeledGraph& g, const LabeledGraph& h)
{
    g.validate();
    h.validate();
    if (g.labels.size() != h.labels.size())
        throw PreconditionError("glued graphs carry different label counts");
    Multigraph joined = disjoint_union(g.graph, h.graph);
    int n = joined.vertex_count();
    UnionFind uf(n);
    for (std::size_t i = 0; i < g.labels.size(); ++i)
        uf.unite(g.labels[i], h.labels[i] + g.graph.vertex_count());
    auto [count, cls] = class_numbering(uf, n);
    std::vector<Multigraph::Edge> edges;
    for (auto [u, v] : joined.edges())
        edges.emplace_back(cls[u], cls[v]);
    return Multigraph(count, std::move(edges));
}

template class BasicMultigraph<false>;
template class BasicMultigraph<true>;

#define VMODEL_INSTANTIATE(D)                                                                               \
    template BasicMultigraph<D> relabel(const BasicMultigraph<D>&, std::span<const int>);                    \
    template BasicMultigraph<D> disjoint_union(const BasicMultigraph<D>&, const BasicMultigraph<D>&);       \
    template BasicMultigraph<D> add_pins(const BasicMultigraph<D>&, const PinMap&);                          \
    template BasicMultigraph<D> contract_pins(const BasicMultigraph<D>&, const PinMap&, TargetPolicy);       \
    template std::pair<BasicMultigraph<D>, PinMap> pendant_reduction(const BasicMultigraph<D>&, const PinMap&); \
    template std::vector<BasicMultigraph<D>> enumerate_graphs<D>(int, int);

VMODEL_INSTANTIATE(false)
VMODEL_INSTANTIATE(true)

#undef VMODEL_INSTANTIATE

} // namespace vmodel
