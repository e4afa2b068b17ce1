#pragma once

#include "vmodel/certify.hpp"
#include "vmodel/graph.hpp"
#include "vmodel/linalg.hpp"
#include "vmodel/model.hpp"

#include <cstddef>
#include <vector>

namespace vmodel {

// Pairwise label-non-isomorphic l-labeled graphs. Labeled vertices are
// 0..l-1 in label order.
struct LabeledFamily {
    int labels = 0;
    int max_extra = 0;
    int max_edges = 0;
    std::vector<LabeledGraph> members;
};

struct FamilyLimits {
    // Raw edge multisets visited before deduplication.
    std::size_t max_candidates = 200000;
    std::size_t max_members = 2000;
};

// Every l-labeled multigraph with at most max_extra unlabeled vertices and
// at most max_edges edges, up to label-preserving isomorphism, sorted by
// (vertex count, edge count, edges).
LabeledFamily enumerate_labeled(int l, int max_extra, int max_edges, const FamilyLimits& limits = {});

// Entry (G, H) is f(GH), the two graphs glued along equal labels.
ScalarMatrix connection_slice(const ParamOracle& f, const LabeledFamily& family);

struct RankBound {
    std::size_t rank = 0;
    std::size_t bound = 0;
    bool ok = false;
};

// rank of the slice of f_y against r^l, for a model of rank at most r.
RankBound rank_bound_check(const VertexModel& y, int r, const LabeledFamily& family);

} // namespace vmodel
