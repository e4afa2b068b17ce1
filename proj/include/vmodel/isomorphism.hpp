#pragma once

#include "vmodel/graph.hpp"

#include <vector>

namespace vmodel {

inline constexpr int kDefaultIsoCap = 12;

// Canonical relabeling of a (colored) multigraph.
//
// `adjacency` is row-major n x n with the number of arcs u -> v at
// [u * n + v]; undirected graphs pass a symmetric matrix with the loop
// count on the diagonal. Vertices may only be placed among vertices of the
// same initial color, and colors are placed in increasing order.
// Returns order[position] = vertex.
std::vector<int> canonical_order(int n, const std::vector<int>& adjacency, bool directed,
                                 const std::vector<int>& initial_colors, int cap = kDefaultIsoCap);

template <bool D>
BasicMultigraph<D> canonical_form(const BasicMultigraph<D>& g, int cap = kDefaultIsoCap);

template <bool D>
bool is_isomorphic(const BasicMultigraph<D>& g, const BasicMultigraph<D>& h, int cap = kDefaultIsoCap);

// Label-preserving canonical form: labeled vertices are pinned to positions
// 0..l-1 in label order, so the result's labels are always 0..l-1.
LabeledGraph canonical_form(const LabeledGraph& g, int cap = kDefaultIsoCap);

} // namespace vmodel
