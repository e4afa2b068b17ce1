#pragma once

#include "vmodel/graph.hpp"
#include "vmodel/model.hpp"
#include "vmodel/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vmodel {

struct PartitionLimits {
    // Brute force costs k^|E| colorings.
    std::size_t max_brute_edges = 16;
    // Largest number of open edge-ends on any tensor during contraction.
    int max_width = 8;
};

enum class PartitionMethod { brute, contract };

// Edge indices (into g.edges()) to contract in this order; edges left out
// are contracted greedily afterwards.
using EliminationOrder = std::optional<std::vector<int>>;

// f_y(G) = sum over colorings kappa: E -> [k] of prod_v y_{kappa(delta(v))}.
// A loop shows its color twice at its vertex.
Scalar partition_brute(const Multigraph& g, const VertexModel& y, const PartitionLimits& limits = {});

// Same value by contracting one symmetric tensor per vertex. The default
// order greedily picks the pair of tensors whose product has the fewest
// open ends.
Scalar partition_contract(const Multigraph& g, const VertexModel& y, const EliminationOrder& order = std::nullopt,
                          const PartitionLimits& limits = {});

Scalar partition(const Multigraph& g, const VertexModel& y, PartitionMethod method = PartitionMethod::contract,
                 const PartitionLimits& limits = {});

// Directed partition function: vertex weight y_{kappa(in-arcs), kappa(out-arcs)}.
// A directed loop contributes its color once on each side.
Scalar directed_partition_brute(const DirectedMultigraph& g, const DirectedVertexModel& y,
                                const PartitionLimits& limits = {});
Scalar directed_partition_contract(const DirectedMultigraph& g, const DirectedVertexModel& y,
                                   const EliminationOrder& order = std::nullopt, const PartitionLimits& limits = {});
Scalar directed_partition(const DirectedMultigraph& g, const DirectedVertexModel& y,
                          PartitionMethod method = PartitionMethod::contract, const PartitionLimits& limits = {});

struct MultiplicativityWitness {
    Scalar left;  // f_y(G)
    Scalar right; // f_y(H)
    Scalar joint; // f_y(G + H)
};

MultiplicativityWitness multiplicativity_witness(const Multigraph& g, const Multigraph& h, const VertexModel& y,
                                                 PartitionMethod method = PartitionMethod::contract);

} // namespace vmodel
