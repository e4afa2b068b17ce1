#include "vmodel/isomorphism.hpp"

#include "vmodel/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace vmodel {

namespace {

// Iterated color refinement. Signatures never mention vertex ids, so the
// final coloring is isomorphism-invariant.
std::vector<int> refine(int n, const std::vector<int>& adj, const std::vector<int>& initial)
{
    using Sig = std::tuple<int, int, int, int, std::vector<std::tuple<int, int, int>>>;
    std::vector<int> color(static_cast<std::size_t>(n));
    {
        std::map<std::tuple<int, int, int, int>, int> ranks;
        std::vector<std::tuple<int, int, int, int>> sigs;
        for (int v = 0; v < n; ++v) {
            int out = 0;
            int in = 0;
            for (int w = 0; w < n; ++w) {
                out += adj[v * n + w];
                in += adj[w * n + v];
            }
            sigs.emplace_back(initial[v], adj[v * n + v], out, in);
            ranks.emplace(sigs.back(), 0);
        }
        int r = 0;
        for (auto& [k, val] : ranks)
            val = r++;
        for (int v = 0; v < n; ++v)
            color[v] = ranks[sigs[v]];
    }
    int classes = -1;
    while (true) {
        int current = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        if (current == classes || current == n)
            break;
        classes = current;
        std::vector<Sig> sigs;
        sigs.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::tuple<int, int, int>> nb;
            for (int w = 0; w < n; ++w)
                if (w != v && (adj[v * n + w] != 0 || adj[w * n + v] != 0))
                    nb.emplace_back(color[w], adj[v * n + w], adj[w * n + v]);
            std::sort(nb.begin(), nb.end());
            sigs.emplace_back(color[v], 0, 0, 0, std::move(nb));
        }
        std::map<Sig, int> ranks;
        for (const auto& s : sigs)
            ranks.emplace(s, 0);
        int r = 0;
        for (auto& [k, val] : ranks)
            val = r++;
        for (int v = 0; v < n; ++v)
            color[v] = ranks[sigs[v]];
    }
    return color;
}

class CanonicalSearch {
public:
    CanonicalSearch(int n, const std::vector<int>& adj, bool directed, std::vector<int> color)
        : n_(n), adj_(adj), directed_(directed), color_(std::move(color)), used_(static_cast<std::size_t>(n), false)
    {
        std::vector<int> sorted(color_);
        std::sort(sorted.begin(), sorted.end());
        cell_at_.assign(sorted.begin(), sorted.end());
        twin_.assign(static_cast<std::size_t>(n * n), false);
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                twin_[v * n + w] = twin_[w * n + v] = is_twin(v, w);
    }

    std::vector<int> run()
    {
        order_.clear();
        code_.clear();
        dfs(0, false);
        return best_order_;
    }

private:
    // Swapping v and w is an automorphism of the colored graph.
    bool is_twin(int v, int w) const
    {
        if (color_[v] != color_[w] || adj_[v * n_ + v] != adj_[w * n_ + w] ||
            adj_[v * n_ + w] != adj_[w * n_ + v])
            return false;
        for (int x = 0; x < n_; ++x) {
            if (x == v || x == w)
                continue;
            if (adj_[v * n_ + x] != adj_[w * n_ + x] || adj_[x * n_ + v] != adj_[x * n_ + w])
                return false;
        }
        return true;
    }

    void append_segment(int pos, int v)
    {
        for (int j = 0; j < pos; ++j) {
            int w = order_[j];
            code_.push_back(adj_[v * n_ + w]);
            if (directed_)
                code_.push_back(adj_[w * n_ + v]);
        }
        code_.push_back(adj_[v * n_ + v]);
    }

    std::size_t segment_begin(int pos) const
    {
        std::size_t p = static_cast<std::size_t>(pos);
        return directed_ ? p * p : p * (p + 1) / 2;
    }

    // `equal` says whether the prefix for positions < pos equals the best
    // code's prefix (false means strictly smaller, or no best yet).
    void dfs(int pos, bool equal)
    {
        if (pos == n_) {
            if (!have_best_ || !equal) {
                best_code_ = code_;
                best_order_ = order_;
                have_best_ = true;
                ++version_;
            }
            return;
        }
        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != cell_at_[pos])
                continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twin_[t * n_ + v]; }))
                continue;
            tried.push_back(v);

            std::size_t begin = segment_begin(pos);
            append_segment(pos, v);
            bool child_equal = equal;
            bool skip = false;
            if (have_best_ && equal) {
                auto c = std::lexicographical_compare_three_way(
                    code_.begin() + static_cast<std::ptrdiff_t>(begin), code_.end(),
                    best_code_.begin() + static_cast<std::ptrdiff_t>(begin),
                    best_code_.begin() + static_cast<std::ptrdiff_t>(code_.size()));
                if (c > 0)
                    skip = true;
                else if (c < 0)
                    child_equal = false;
            }
            if (!skip) {
                used_[v] = true;
                order_.push_back(v);
                unsigned long before = version_;
                dfs(pos + 1, have_best_ ? child_equal : false);
                // A new best found below shares our whole prefix.
                if (version_ != before)
                    equal = true;
                order_.pop_back();
                used_[v] = false;
            }
            code_.resize(begin);
        }
    }

    int n_;
    const std::vector<int>& adj_;
    bool directed_;
    std::vector<int> color_;
    std::vector<int> cell_at_;
    std::vector<bool> twin_;
    std::vector<bool> used_;
    std::vector<int> order_;
    std::vector<int> code_;
    std::vector<int> best_order_;
    std::vector<int> best_code_;
    bool have_best_ = false;
    unsigned long version_ = 0;
};

template <bool D>
std::vector<int> adjacency_of(const BasicMultigraph<D>& g)
{
    int n = g.vertex_count();
    std::vector<int> adj(static_cast<std::size_t>(n * n), 0);
    for (auto [u, v] : g.edges()) {
        ++adj[u * n + v];
        if (!D && u != v)
            ++adj[v * n + u];
    }
    return adj;
}

template <bool D>
BasicMultigraph<D> relabel(const BasicMultigraph<D>& g, const std::vector<int>& order)
{
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int>(i);
    std::vector<typename BasicMultigraph<D>::Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edges.emplace_back(pos[u], pos[v]);
    return BasicMultigraph<D>(g.vertex_count(), std::move(edges));
}

} // namespace

std::vector<int> canonical_order(int n, const std::vector<int>& adjacency, bool directed,
                                 const std::vector<int>& initial_colors, int cap)
{
    if (n > cap)
        throw CapExceeded("isomorphism cap exceeded: " + std::to_string(n) + " vertices > " + std::to_string(cap));
    if (n == 0)
        return {};
    auto color = refine(n, adjacency, initial_colors);
    return CanonicalSearch(n, adjacency, directed, std::move(color)).run();
}

template <bool D>
BasicMultigraph<D> canonical_form(const BasicMultigraph<D>& g, int cap)
{
    int n = g.vertex_count();
    auto order = canonical_order(n, adjacency_of(g), D, std::vector<int>(static_cast<std::size_t>(n), 0), cap);
    return relabel(g, order);
}

template <bool D>
bool is_isomorphic(const BasicMultigraph<D>& g, const BasicMultigraph<D>& h, int cap)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    auto dg = g.degrees();
    auto dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return canonical_form(g, cap) == canonical_form(h, cap);
}

LabeledGraph canonical_form(const LabeledGraph& g, int cap)
{
    g.validate();
    int n = g.graph.vertex_count();
    int l = g.label_count();
    std::vector<int> colors(static_cast<std::size_t>(n), l);
    for (int i = 0; i < l; ++i)
        colors[g.labels[i]] = i;
    auto order = canonical_order(n, adjacency_of(g.graph), false, colors, cap);
    LabeledGraph r;
    r.graph = relabel(g.graph, order);
    for (int i = 0; i < l; ++i)
        r.labels.push_back(i);
    return r;
}

template Multigraph canonical_form(const Multigraph&, int);
template DirectedMultigraph canonical_form(const DirectedMultigraph&, int);
template bool is_isomorphic(const Multigraph&, const Multigraph&, int);
template bool is_isomorphic(const DirectedMultigraph&, const DirectedMultigraph&, int);

} // namespace vmodel
