#include "vmodel/certify.hpp"

#include "vmodel/error.hpp"
#include "vmodel/isomorphism.hpp"
#include "vmodel/permutations.hpp"

#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>

namespace vmodel {

namespace {

template <bool D>
struct GraphHash {
    std::size_t operator()(const BasicMultigraph<D>& g) const
    {
        std::size_t h = static_cast<std::size_t>(g.vertex_count()) * 0x9e3779b97f4a7c15ULL;
        for (auto [u, v] : g.edges()) {
            h ^= static_cast<std::size_t>(u * 64 + v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

void check_pin_count(const PinMap& pins, const AltSumLimits& limits)
{
    if (static_cast<int>(pins.size()) > limits.max_pins)
        throw CapExceeded("alternating sum over " + std::to_string(pins.size()) + "! permutations exceeds the pin cap " +
                          std::to_string(limits.max_pins));
}

int component_count(const Multigraph& g)
{
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        int a = find(u);
        int b = find(v);
        if (a != b) {
            parent[b] = a;
            --components;
        }
    }
    return components;
}

} // namespace

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::model_induced:
        return "model-induced";
    case Provenance::builtin:
        return "builtin";
    case Provenance::table_backed:
        return "table-backed";
    }
    return "unknown";
}

ParamOracle model_oracle(VertexModel y, PartitionMethod method, const PartitionLimits& limits)
{
    return ParamOracle(
        [y = std::move(y), method, limits](const Multigraph& g) { return partition(g, y, method, limits); },
        Provenance::model_induced, "model");
}

DirectedParamOracle directed_model_oracle(DirectedVertexModel y, PartitionMethod method, const PartitionLimits& limits)
{
    return DirectedParamOracle(
        [y = std::move(y), method, limits](const DirectedMultigraph& g) {
            return directed_partition(g, y, method, limits);
        },
        Provenance::model_induced, "directed-model");
}

Scalar counterexample_f(const Multigraph& g)
{
    for (int d : g.degrees())
        if (d != 2)
            return Scalar(0);
    return pow(Scalar(-2), static_cast<unsigned>(component_count(g)));
}

ParamOracle counterexample_oracle()
{
    return ParamOracle(counterexample_f, Provenance::builtin, "counterexample");
}

template <bool D>
BasicParamOracle<D> table_oracle(const std::map<BasicMultigraph<D>, Scalar>& table, std::string name)
{
    auto canonical = std::make_shared<std::map<BasicMultigraph<D>, Scalar>>();
    for (const auto& [g, v] : table)
        (*canonical)[canonical_form(g)] = v;
    return BasicParamOracle<D>(
        [canonical](const BasicMultigraph<D>& g) {
            auto it = canonical->find(canonical_form(g));
            if (it == canonical->end())
                throw OutsideTable("graph with " + std::to_string(g.vertex_count()) + " vertices and " +
                                   std::to_string(g.edge_count()) + " edges is outside the table");
            return it->second;
        },
        Provenance::table_backed, std::move(name));
}

template <bool D>
BasicParamOracle<D> memoized(BasicParamOracle<D> f)
{
    using Cache = std::unordered_map<BasicMultigraph<D>, Scalar, GraphHash<D>>;
    auto cache = std::make_shared<Cache>();
    std::string name = f.name();
    Provenance provenance = f.provenance();
    return BasicParamOracle<D>(
        [cache, f = std::move(f)](const BasicMultigraph<D>& g) {
            auto it = cache->find(g);
            if (it != cache->end())
                return it->second;
            Scalar v = f(g);
            cache->emplace(g, v);
            return v;
        },
        provenance, std::move(name));
}

template <bool D>
Scalar alt_sum_pins(const BasicParamOracle<D>& f, const BasicMultigraph<D>& g, const PinMap& pins,
                    const AltSumLimits& limits)
{
    check_pin_count(pins, limits);
    pins.validate(g.vertex_count());
    Scalar sum;
    bool first = true;
    for_each_signed_permutation(static_cast<int>(pins.size()), [&](std::span<const int> perm, int sign) {
        Scalar term = f(add_pins(g, pins.permuted(perm)));
        if (first) {
            sum = Scalar::zero(term.ring());
            first = false;
        }
        if (sign > 0)
            sum += term;
        else
            sum -= term;
    });
    return sum;
}

template <bool D>
Scalar alt_sum_contract(const BasicParamOracle<D>& f, const BasicMultigraph<D>& g, const PinMap& pins,
                        TargetPolicy policy, const AltSumLimits& limits)
{
    check_pin_count(pins, limits);
    pins.validate(g.vertex_count());
    if (policy == TargetPolicy::require_disjoint && pins.targets_meet_pins())
        throw PreconditionError("contraction sums need s(U) disjoint from U");
    Scalar sum;
    bool first = true;
    for_each_signed_permutation(static_cast<int>(pins.size()), [&](std::span<const int> perm, int sign) {
        Scalar term = f(contract_pins(g, pins.permuted(perm), policy));
        if (first) {
            sum = Scalar::zero(term.ring());
            first = false;
        }
        if (sign > 0)
            sum += term;
        else
            sum -= term;
    });
    return sum;
}

template <bool D>
std::pair<Scalar, Scalar> thm2_implies_thm1_check(const BasicParamOracle<D>& f, const BasicMultigraph<D>& g,
                                                   const PinMap& pins, const AltSumLimits& limits)
{
    auto [reduced, moved] = pendant_reduction(g, pins);
    return {alt_sum_pins(f, g, pins, limits), alt_sum_contract(f, reduced, moved, TargetPolicy::require_disjoint, limits)};
}

template <bool D>
std::optional<BasicWitness<D>> search_violation_in(const BasicParamOracle<D>& f, int pin_count,
                                                   const std::vector<BasicMultigraph<D>>& graphs, SumMode mode,
                                                   const AltSumLimits& limits, SearchStats* stats)
{
    if (pin_count < 0)
        throw PreconditionError("negative pin count");
    if (pin_count > limits.max_pins)
        throw CapExceeded("alternating sum over " + std::to_string(pin_count) + "! permutations exceeds the pin cap " +
                          std::to_string(limits.max_pins));
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    const std::size_t u = static_cast<std::size_t>(pin_count);

    // Signed permutations once, reused for every sum.
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
    for_each_signed_permutation(pin_count, [&](std::span<const int> perm, int sign) {
        perms.emplace_back(perm.begin(), perm.end());
        signs.push_back(sign);
    });

    for (const auto& g : graphs) {
        const int n = g.vertex_count();
        ++st.graphs;
        if (n < pin_count)
            continue;
        std::optional<BasicWitness<D>> found;
        for_each_subset(n, pin_count, [&](std::span<const int> pin_span) {
            if (found)
                return;
            std::vector<int> pins(pin_span.begin(), pin_span.end());
            std::vector<int> choices;
            for (int v = 0; v < n; ++v)
                if (mode == SumMode::pins || !std::binary_search(pins.begin(), pins.end(), v))
                    choices.push_back(v);
            const std::size_t m = choices.size();
            std::size_t table_size = 1;
            for (std::size_t i = 0; i < u; ++i)
                table_size *= m;
            std::vector<std::optional<Scalar>> table(table_size);
            std::vector<std::size_t> position(static_cast<std::size_t>(n), 0);
            for (std::size_t i = 0; i < m; ++i)
                position[static_cast<std::size_t>(choices[i])] = i;

            auto value = [&](const std::vector<int>& targets) -> const Scalar& {
                std::size_t idx = 0;
                for (std::size_t i = u; i-- > 0;)
                    idx = idx * m + position[static_cast<std::size_t>(targets[i])];
                auto& slot = table[idx];
                if (!slot) {
                    PinMap p(pins, targets);
                    slot = mode == SumMode::pins ? f(add_pins(g, p)) : f(contract_pins(g, p));
                    ++st.evaluations;
                }
                return *slot;
            };

            // A repeated target makes the sum vanish identically (swapping the
            // two pins fixes every term and flips its sign), and reordering the
            // targets only changes the sign, so one sum per target set suffices.
            std::vector<int> permuted(u);
            std::vector<int> targets(u);
            for_each_subset(static_cast<int>(m), pin_count, [&](std::span<const int> picked) {
                if (found)
                    return;
                for (std::size_t i = 0; i < u; ++i)
                    targets[i] = choices[static_cast<std::size_t>(picked[i])];
                ++st.instances;
                Scalar sum;
                for (std::size_t p = 0; p < perms.size(); ++p) {
                    for (std::size_t i = 0; i < u; ++i)
                        permuted[i] = targets[static_cast<std::size_t>(perms[p][i])];
                    const Scalar& term = value(permuted);
                    if (p == 0)
                        sum = Scalar::zero(term.ring());
                    if (signs[p] > 0)
                        sum += term;
                    else
                        sum -= term;
                }
                if (!sum.is_zero())
                    found = BasicWitness<D>{g, PinMap(pins, targets), sum};
            });
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

template <bool D>
std::optional<BasicWitness<D>> search_violation(const BasicParamOracle<D>& f, int pin_count, SearchBounds bounds,
                                                SumMode mode, const AltSumLimits& limits, SearchStats* stats)
{
    return search_violation_in(f, pin_count, enumerate_graphs<D>(bounds.max_vertices, bounds.max_edges), mode, limits,
                               stats);
}

template <bool D>
bool check_multiplicative(const BasicParamOracle<D>& f,
                          const std::vector<std::pair<BasicMultigraph<D>, BasicMultigraph<D>>>& pairs)
{
    if (!f(BasicMultigraph<D>()).is_one())
        return false;
    for (const auto& [g, h] : pairs)
        if (!(f(disjoint_union(g, h)) == f(g) * f(h)))
            return false;
    return true;
}

#define VMODEL_INSTANTIATE(D)                                                                                      \
    template BasicParamOracle<D> table_oracle(const std::map<BasicMultigraph<D>, Scalar>&, std::string);             \
    template BasicParamOracle<D> memoized(BasicParamOracle<D>);                                                     \
    template Scalar alt_sum_pins(const BasicParamOracle<D>&, const BasicMultigraph<D>&, const PinMap&,              \
                                 const AltSumLimits&);                                                              \
    template Scalar alt_sum_contract(const BasicParamOracle<D>&, const BasicMultigraph<D>&, const PinMap&,          \
                                     TargetPolicy, const AltSumLimits&);                                            \
    template std::pair<Scalar, Scalar> thm2_implies_thm1_check(const BasicParamOracle<D>&, const BasicMultigraph<D>&, \
                                                                const PinMap&, const AltSumLimits&);                \
    template std::optional<BasicWitness<D>> search_violation(const BasicParamOracle<D>&, int, SearchBounds, SumMode, \
                                                             const AltSumLimits&, SearchStats*);                    \
    template std::optional<BasicWitness<D>> search_violation_in(const BasicParamOracle<D>&, int,                      \
                                                                const std::vector<BasicMultigraph<D>>&, SumMode,     \
                                                                const AltSumLimits&, SearchStats*);                 \
    template bool check_multiplicative(const BasicParamOracle<D>&,                                                  \
                                       const std::vector<std::pair<BasicMultigraph<D>, BasicMultigraph<D>>>&);

VMODEL_INSTANTIATE(false)
VMODEL_INSTANTIATE(true)

#undef VMODEL_INSTANTIATE

} // namespace vmodel
