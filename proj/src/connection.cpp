#include "vmodel/connection.hpp"

#include "vmodel/error.hpp"
#include "vmodel/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vmodel {

LabeledFamily enumerate_labeled(int l, int max_extra, int max_edges, const FamilyLimits& limits)
{
    if (l < 0 || max_extra < 0 || max_edges < 0)
        throw PreconditionError("family bounds must be nonnegative");
    std::set<LabeledGraph> seen;
    std::size_t visited = 0;
    std::vector<int> labels(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        labels[static_cast<std::size_t>(i)] = i;

    for (int extra = 0; extra <= max_extra; ++extra) {
        const int n = l + extra;
        std::vector<Multigraph::Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                slots.emplace_back(u, v);
        // Edge multisets as nondecreasing slot sequences.
        std::vector<Multigraph::Edge> edges;
        auto extend = [&](auto&& self, std::size_t from) -> void {
            if (++visited > limits.max_candidates)
                throw CapExceeded("labeled family exceeds " + std::to_string(limits.max_candidates) +
                                  " candidates; lower --max-extra or --max-edges");
            seen.insert(canonical_form(LabeledGraph{Multigraph(n, edges), labels}));
            if (seen.size() > limits.max_members)
                throw CapExceeded("labeled family exceeds " + std::to_string(limits.max_members) + " members");
            if (static_cast<int>(edges.size()) == max_edges)
                return;
            for (std::size_t s = from; s < slots.size(); ++s) {
                edges.push_back(slots[s]);
                self(self, s);
                edges.pop_back();
            }
        };
        extend(extend, 0);
    }

    LabeledFamily family{l, max_extra, max_edges, {seen.begin(), seen.end()}};
    std::stable_sort(family.members.begin(), family.members.end(), [](const LabeledGraph& a, const LabeledGraph& b) {
        if (a.graph.vertex_count() != b.graph.vertex_count())
            return a.graph.vertex_count() < b.graph.vertex_count();
        return a.graph.edge_count() < b.graph.edge_count();
    });
    return family;
}

ScalarMatrix connection_slice(const ParamOracle& f, const LabeledFamily& family)
{
    const auto& m = family.members;
    ScalarMatrix c(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            c(i, j) = f(glue_labeled(m[i], m[j]));
    return c;
}

RankBound rank_bound_check(const VertexModel& y, int r, const LabeledFamily& family)
{
    if (r < 0)
        throw PreconditionError("negative model rank");
    RankBound result;
    result.rank = exact_rank(connection_slice(memoized(model_oracle(y)), family));
    result.bound = 1;
    for (int i = 0; i < family.labels; ++i)
        result.bound *= static_cast<std::size_t>(r);
    result.ok = result.rank <= result.bound;
    return result;
}

} // namespace vmodel
