#pragma once

#include "vmodel/graph.hpp"
#include "vmodel/model.hpp"
#include "vmodel/partition.hpp"
#include "vmodel/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vmodel {

enum class Provenance { model_induced, builtin, table_backed };

std::string to_string(Provenance p);

// A graph parameter f: graphs -> F behind a function handle. Implementations
// must be isomorphism-invariant.
template <bool D>
class BasicParamOracle {
public:
    using Graph = BasicMultigraph<D>;
    using Function = std::function<Scalar(const Graph&)>;

    BasicParamOracle(Function fn, Provenance provenance, std::string name)
        : fn_(std::move(fn)), provenance_(provenance), name_(std::move(name))
    {
    }

    Scalar operator()(const Graph& g) const { return fn_(g); }
    Provenance provenance() const { return provenance_; }
    const std::string& name() const { return name_; }

private:
    Function fn_;
    Provenance provenance_;
    std::string name_;
};

using ParamOracle = BasicParamOracle<false>;
using DirectedParamOracle = BasicParamOracle<true>;

ParamOracle model_oracle(VertexModel y, PartitionMethod method = PartitionMethod::contract,
                         const PartitionLimits& limits = {});
DirectedParamOracle directed_model_oracle(DirectedVertexModel y, PartitionMethod method = PartitionMethod::contract,
                                          const PartitionLimits& limits = {});

// (-2)^{#components} on 2-regular graphs, 0 otherwise; f(empty) = 1.
Scalar counterexample_f(const Multigraph& g);
ParamOracle counterexample_oracle();

// Finite table keyed by isomorphism class. Lookups outside the table throw
// OutsideTable.
template <bool D>
BasicParamOracle<D> table_oracle(const std::map<BasicMultigraph<D>, Scalar>& table, std::string name = "table");

// Caches values by exact labeled graph. The cache is shared by copies of
// the returned oracle and is not synchronized.
template <bool D>
BasicParamOracle<D> memoized(BasicParamOracle<D> f);

struct AltSumLimits {
    int max_pins = 6; // |U|! terms
};

// sum over pi in S_U of sgn(pi) f(G_{s o pi}).
template <bool D>
Scalar alt_sum_pins(const BasicParamOracle<D>& f, const BasicMultigraph<D>& g, const PinMap& pins,
                    const AltSumLimits& limits = {});

// sum over pi in S_U of sgn(pi) f(G / (s o pi)). Requires s(U) and U to be
// disjoint unless `policy` says otherwise.
template <bool D>
Scalar alt_sum_contract(const BasicParamOracle<D>& f, const BasicMultigraph<D>& g, const PinMap& pins,
                        TargetPolicy policy = TargetPolicy::require_disjoint, const AltSumLimits& limits = {});

// (pin sum on G, contraction sum on the pendant reduction of G). The two
// agree term by term.
template <bool D>
std::pair<Scalar, Scalar> thm2_implies_thm1_check(const BasicParamOracle<D>& f, const BasicMultigraph<D>& g,
                                                   const PinMap& pins, const AltSumLimits& limits = {});

template <bool D>
struct BasicWitness {
    BasicMultigraph<D> graph;
    PinMap pins;
    Scalar value;
};

using Witness = BasicWitness<false>;
using DirectedWitness = BasicWitness<true>;

enum class SumMode { pins, contract };

struct SearchBounds {
    int max_vertices = 4;
    int max_edges = 4;
};

struct SearchStats {
    std::size_t graphs = 0;
    std::size_t instances = 0;   // (G, U, s) triples whose sum was formed
    std::size_t evaluations = 0; // oracle calls
};

// First (G, U, s) with a nonzero alternating sum. Graphs are visited as
// canonical forms in enumerate_graphs order, then U in lexicographic order,
// then s in lexicographic order (into V, or into V \ U for contractions).
// Only increasing s are summed: a repeated target forces the sum to zero
// and permuting the targets only flips its sign. Each surgery result f(G_t)
// for a fixed (G, U) is evaluated once and shared by all sums that need it.
template <bool D>
std::optional<BasicWitness<D>> search_violation(const BasicParamOracle<D>& f, int pin_count, SearchBounds bounds,
                                                SumMode mode, const AltSumLimits& limits = {},
                                                SearchStats* stats = nullptr);

// The same search over an explicit list of graphs.
template <bool D>
std::optional<BasicWitness<D>> search_violation_in(const BasicParamOracle<D>& f, int pin_count,
                                                   const std::vector<BasicMultigraph<D>>& graphs, SumMode mode,
                                                   const AltSumLimits& limits = {}, SearchStats* stats = nullptr);

// f(empty) = 1 and f(G + H) = f(G) f(H) on every listed pair.
template <bool D>
bool check_multiplicative(const BasicParamOracle<D>& f,
                          const std::vector<std::pair<BasicMultigraph<D>, BasicMultigraph<D>>>& pairs);

} // namespace vmodel
