#include "vmodel/suite.hpp"

#include "vmodel/io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vmodel {

using checks::CheckResult;
using checks::Config;
using checks::ExhaustiveSpec;

std::optional<Scale> parse_scale(const std::string& name)
{
    if (name == "smoke")
        return Scale::smoke;
    if (name == "desk")
        return Scale::desk;
    return std::nullopt;
}

std::string to_string(Scale scale)
{
    return scale == Scale::smoke ? "smoke" : "desk";
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& name)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return seed ^ h;
}

namespace {

// Instance counts and bounds per scale. Desk bounds meet the acceptance
// thresholds; smoke runs in a few seconds.
struct Plan {
    int random_small;  // cheap randomized checks
    int engine;        // engine equivalence instances
    int directed_engine;
    int pairs;         // multiplicativity / homomorphism pairs
    int named;         // graphs for the named models
    int pendant;       // pendant reduction sums
    int evaluation;    // p_poly vs brute
    SearchBounds canonical;
    SearchBounds exhaustive;
    int pin_models;
    int rank_models;
    std::vector<int> rank_colors;
    SearchBounds small_search; // counterexample, matching and overlap searches
    SearchBounds kernel;
    int diagram_vertices;
    int diagram_degree;
    int diagram_colors;
    int moment_degree;
    int slice_labels;
    int slice_extra;
    int slice_edges;
};

Plan plan_for(Scale scale)
{
    if (scale == Scale::smoke)
        return Plan{20, 60, 30, 30, 20, 40, 30, {3, 3}, {3, 4}, 2, 1, {1, 2}, {3, 3}, {3, 3}, 2, 3, 2, 2, 1, 1, 2};
    return Plan{100, 500, 200, 200, 60, 200, 200, {5, 6}, {5, 6}, 5, 2, {1, 2, 3}, {4, 4}, {4, 4}, 3, 4, 2, 3, 2, 1, 3};
}

struct Entry {
    std::string name;
    std::function<CheckResult(std::uint64_t)> run;
};

std::vector<Entry> battery(const Plan& p, const Config& c)
{
    const GraphShape engine_shape{0, 6, 8, true};
    const GraphShape directed_shape{0, 5, 6, true};
    ExhaustiveSpec pins{p.exhaustive, {1, 2}, {}, p.pin_models};
    ExhaustiveSpec contractions{p.exhaustive, {1, 2}, p.rank_colors, p.rank_models};
    std::vector<Entry> e;
    auto add = [&](std::string name, std::function<CheckResult(std::uint64_t)> fn) {
        e.push_back({std::move(name), std::move(fn)});
    };

    add("graph.canonical-forms", [=](auto s) { return checks::canonical_forms(s, p.canonical, false, p.random_small); });
    add("graph.canonical-forms-directed",
        [=](auto s) { return checks::canonical_forms(s, p.canonical, true, p.random_small); });
    add("graph.union-laws", [=](auto s) { return checks::union_laws(s, p.random_small); });
    add("graph.pendant-reduction", [=](auto s) { return checks::pendant_reduction_identity(s, p.pendant, 6); });
    add("graph.surgery-degrees", [=](auto s) { return checks::surgery_degrees(s, p.pendant); });

    add("models.moment-symmetry", [=](auto s) { return checks::moment_symmetry(s, 3, p.moment_degree, 2); });
    add("models.moment-rank-bound", [=](auto s) { return checks::moment_rank_bound(s, 3, 3, p.moment_degree, 2); });
    add("models.rank-vs-elimination", [=](auto s) { return checks::rank_matches_naive(s, p.random_small, 6); });
    add("models.rank-exact-instances", [=](auto) { return checks::rank_exact_instances(); });

    add("partition.engine-equivalence",
        [=](auto s) { return checks::engine_equivalence(s, p.engine, engine_shape, 3, c); });
    add("partition.engine-equivalence-directed",
        [=](auto s) { return checks::directed_engine_equivalence(s, p.directed_engine, directed_shape, 2, c); });
    add("partition.multiplicativity", [=](auto s) { return checks::multiplicativity(s, p.pairs, engine_shape, c); });
    add("partition.named-models", [=](auto s) { return checks::named_models(s, p.named, c); });
    add("partition.isomorphism-invariance", [=](auto s) { return checks::isomorphism_invariance(s, p.random_small, c); });
    add("partition.zero-colors", [=](auto s) { return checks::zero_colors(s, p.random_small); });
    add("partition.order-independence", [=](auto s) { return checks::order_independence(s, p.random_small, c); });

    add("certify.pin-sums", [=](auto s) { return checks::pin_sums(s, pins, false, c); });
    add("certify.directed-pin-sums", [=](auto s) { return checks::pin_sums(s, pins, true, c); });
    add("certify.contraction-sums", [=](auto s) { return checks::contraction_sums(s, contractions, false, c); });
    add("certify.directed-contraction-sums",
        [=](auto s) { return checks::contraction_sums(s, contractions, true, c); });
    add("certify.pendant-sums", [=](auto s) { return checks::pendant_sums(s, p.pendant, c); });
    add("certify.alternation", [=](auto s) { return checks::alternation(s, p.random_small, c); });
    add("certify.counterexample-search", [=](auto) { return checks::counterexample_search(p.small_search, c); });
    add("certify.counterexample-multiplicative",
        [=](auto s) { return checks::counterexample_multiplicative(s, std::max(p.random_small, 50)); });
    add("certify.matching-search", [=](auto) { return checks::matching_search(p.small_search, c); });
    add("certify.overlap-remark", [=](auto) { return checks::overlap_remark(p.small_search, c); });

    add("symbolic.homomorphism", [=](auto s) { return checks::polynomial_homomorphism(s, p.pairs / 2); });
    add("symbolic.evaluation", [=](auto s) { return checks::polynomial_evaluation(s, p.evaluation); });
    add("symbolic.kernel-containment", [=](auto) { return checks::kernel_containment(p.kernel, 1, c); });
    add("symbolic.diagram",
        [=](auto) { return checks::diagram_commutes(p.diagram_vertices, p.diagram_degree, p.diagram_colors); });
    add("symbolic.quantum-relabeling", [=](auto s) { return checks::quantum_relabeling(s, p.random_small); });

    add("connection.slice-symmetry", [=](auto s) { return checks::slice_symmetry(s, 2); });
    add("connection.slice-monotonicity", [=](auto s) { return checks::slice_monotonicity(s, 3); });
    add("connection.rank-bound", [=](auto s) {
        return checks::connection_rank_bounds(s, 2, p.slice_labels, p.slice_extra, p.slice_edges, 2);
    });
    add("connection.counterexample-slice", [=](auto) { return checks::counterexample_slice(2, 3, 4); });
    return e;
}

bool selected(const std::string& name, const std::vector<std::string>& only)
{
    if (only.empty())
        return true;
    return std::any_of(only.begin(), only.end(), [&](const std::string& prefix) { return name.starts_with(prefix); });
}

} // namespace

std::size_t RunReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string RunReport::text() const
{
    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "seed: " << seed << "\n";
    out << "scale: " << to_string(scale) << "\n";
    out << "caps: brute-edges=" << config.partition.max_brute_edges << " width=" << config.partition.max_width
        << " usize=" << config.alt.max_pins << "\n";
    if (config.inject_fault)
        out << "fault injection: on\n";
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.instances << " instances)";
        if (!c.detail.empty())
            out << ": " << c.detail;
        out << "\n";
    }
    out << checks.size() - failures() << "/" << checks.size() << " checks passed\n";
    return out.str();
}

std::string RunReport::json() const
{
    Json j;
    j["command"] = command;
    j["seed"] = seed;
    j["scale"] = to_string(scale);
    j["caps"] = {{"brute_edges", config.partition.max_brute_edges},
                 {"width", config.partition.max_width},
                 {"usize", config.alt.max_pins}};
    j["inject_fault"] = config.inject_fault;
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back({{"name", c.name},
                        {"status", c.passed ? "pass" : "fail"},
                        {"instances", c.instances},
                        {"detail", c.detail}});
    j["checks"] = std::move(list);
    j["passed"] = checks.size() - failures();
    j["failed"] = failures();
    return j.dump(2) + "\n";
}

RunReport run_suite(Scale scale, std::uint64_t seed, const Config& config, std::string command,
                    const std::vector<std::string>& only)
{
    RunReport report;
    report.command = std::move(command);
    report.seed = seed;
    report.scale = scale;
    report.config = config;
    for (const auto& entry : battery(plan_for(scale), config)) {
        if (!selected(entry.name, only))
            continue;
        CheckResult r;
        try {
            r = entry.run(check_seed(seed, entry.name));
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.name = entry.name;
        report.checks.push_back(std::move(r));
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    return report;
}

} // namespace vmodel
