#pragma once

#include "vmodel/certify.hpp"
#include "vmodel/partition.hpp"
#include "vmodel/random.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Property checks shared by the suite driver and the acceptance binary.
// Each check draws its instances from its own seed and reports how many it
// examined; failures carry the first offending instance in `detail`.
namespace vmodel::checks {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t instances = 0;
    std::string detail;
};

struct Config {
    // Wider than the library default: exhaustive pin sums on 6-edge graphs
    // create vertices with up to 9 open ends.
    PartitionLimits partition{16, 12};
    AltSumLimits alt{};
    // Compares the contraction engine against a perturbed model so that the
    // battery must fail.
    bool inject_fault = false;
};

// graph-core
CheckResult canonical_forms(std::uint64_t seed, SearchBounds bounds, bool directed, int samples);
CheckResult union_laws(std::uint64_t seed, int count);
CheckResult pendant_reduction_identity(std::uint64_t seed, int count, int max_vertices);
CheckResult surgery_degrees(std::uint64_t seed, int count);

// models
CheckResult moment_symmetry(std::uint64_t seed, int max_colors, int max_degree, int models);
CheckResult moment_rank_bound(std::uint64_t seed, int max_rank, int max_colors, int max_degree, int models);
CheckResult rank_matches_naive(std::uint64_t seed, int count, int size);
CheckResult rank_exact_instances();

// partition
CheckResult engine_equivalence(std::uint64_t seed, int count, const GraphShape& shape, int max_colors,
                               const Config& config);
CheckResult directed_engine_equivalence(std::uint64_t seed, int count, const GraphShape& shape, int max_colors,
                                        const Config& config);
CheckResult multiplicativity(std::uint64_t seed, int pairs, const GraphShape& shape, const Config& config);
CheckResult named_models(std::uint64_t seed, int graphs, const Config& config);
CheckResult isomorphism_invariance(std::uint64_t seed, int count, const Config& config);
CheckResult zero_colors(std::uint64_t seed, int count);
CheckResult order_independence(std::uint64_t seed, int count, const Config& config);

// certify
struct ExhaustiveSpec {
    SearchBounds bounds{5, 6};
    std::vector<int> sizes;  // k (pins) or r (contractions)
    std::vector<int> colors; // contractions only: k values per r
    int models = 5;
};
CheckResult pin_sums(std::uint64_t seed, const ExhaustiveSpec& spec, bool directed, const Config& config);
CheckResult contraction_sums(std::uint64_t seed, const ExhaustiveSpec& spec, bool directed, const Config& config);
CheckResult pendant_sums(std::uint64_t seed, int count, const Config& config);
CheckResult alternation(std::uint64_t seed, int count, const Config& config);
CheckResult counterexample_search(SearchBounds bounds, const Config& config);
CheckResult counterexample_multiplicative(std::uint64_t seed, int pairs);
CheckResult matching_search(SearchBounds bounds, const Config& config);
CheckResult overlap_remark(SearchBounds bounds, const Config& config);

// symbolic
CheckResult polynomial_homomorphism(std::uint64_t seed, int pairs);
CheckResult polynomial_evaluation(std::uint64_t seed, int count);
CheckResult kernel_containment(SearchBounds bounds, int colors, const Config& config);
CheckResult diagram_commutes(int max_vertices, int max_degree, int max_colors);
CheckResult quantum_relabeling(std::uint64_t seed, int count);

// connection
CheckResult slice_symmetry(std::uint64_t seed, int models);
CheckResult slice_monotonicity(std::uint64_t seed, int models);
CheckResult connection_rank_bounds(std::uint64_t seed, int max_rank, int max_labels, int max_extra, int max_edges,
                                   int models);
CheckResult counterexample_slice(int max_extra, int max_edges, std::size_t bound);

} // namespace vmodel::checks
