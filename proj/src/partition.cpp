#include "vmodel/partition.hpp"

#include "vmodel/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <limits>
#include <string>

namespace vmodel {

namespace {

// Which side of a vertex an edge-end sits on. Undirected graphs only use
// `in`, which makes the joint index coincide with the plain one.
enum Side : int { in = 0, out = 1 };

struct End {
    int edge;
    int side;
};

// Incidence structure shared by both engines: the ends at vertex v are
// flat[offset[v] .. offset[v+1]), in increasing edge order, and the two ends
// of a loop are adjacent.
struct Network {
    int colors = 0;
    int sides = 1;
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<int> offset;
    std::vector<End> flat;

    std::span<const End> ends(int v) const
    {
        return {flat.data() + offset[static_cast<std::size_t>(v)],
                static_cast<std::size_t>(offset[static_cast<std::size_t>(v) + 1] - offset[static_cast<std::size_t>(v)])};
    }
};

template <bool D>
Network network_of(const BasicMultigraph<D>& g, int colors)
{
    Network net;
    net.colors = colors;
    net.sides = D ? 2 : 1;
    net.vertex_count = g.vertex_count();
    net.edge_count = static_cast<int>(g.edge_count());
    net.offset.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (auto [u, v] : g.edges()) {
        ++net.offset[static_cast<std::size_t>(u) + 1];
        ++net.offset[static_cast<std::size_t>(v) + 1];
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(g.vertex_count()); ++v)
        net.offset[v + 1] += net.offset[v];
    net.flat.resize(2 * g.edge_count());
    std::vector<int> fill(net.offset.begin(), net.offset.end() - 1);
    int e = 0;
    for (auto [u, v] : g.edges()) {
        net.flat[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = {e, D ? out : in};
        net.flat[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = {e, in};
        ++e;
    }
    return net;
}

void check_model(const Network& net, const VertexModel& joint)
{
    int needed = 0;
    for (int v = 0; v < net.vertex_count; ++v)
        needed = std::max(needed, static_cast<int>(net.ends(v).size()));
    if (!joint.determines_degree(needed))
        throw PreconditionError("model degree cap " + std::to_string(*joint.degree_cap()) +
                                " is below the maximum vertex degree " + std::to_string(needed));
}

std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

Scalar brute(const Network& net, const VertexModel& joint, const PartitionLimits& limits)
{
    if (static_cast<std::size_t>(net.edge_count) > limits.max_brute_edges)
        throw CapExceeded("brute-force partition capped at " + std::to_string(limits.max_brute_edges) + " edges, graph has " +
                          std::to_string(net.edge_count));
    check_model(net, joint);
    const Ring ring = joint.ring();
    const int k = net.colors;
    if (net.edge_count > 0 && k == 0)
        return Scalar::zero(ring);

    std::vector<int> coloring(static_cast<std::size_t>(net.edge_count), 0);
    std::vector<int> counts(static_cast<std::size_t>(k * net.sides), 0);
    Scalar total = Scalar::zero(ring);
    while (true) {
        Scalar product = Scalar::one(ring);
        for (int v = 0; v < net.vertex_count; ++v) {
            std::fill(counts.begin(), counts.end(), 0);
            for (const End& end : net.ends(v))
                ++counts[static_cast<std::size_t>(end.side * k + coloring[end.edge])];
            const Scalar& w = joint.value(counts);
            if (w.is_zero()) {
                product = Scalar::zero(ring);
                break;
            }
            product *= w;
        }
        if (!product.is_zero())
            total += product;

        int pos = 0;
        while (pos < net.edge_count && ++coloring[pos] == k)
            coloring[pos++] = 0;
        if (pos == net.edge_count)
            break;
    }
    return total;
}

// Number types for the contraction engine. Exact scalars always work; when
// the model table holds small (Gaussian) integers the engine first runs on
// checked machine integers and falls back on overflow.
struct SmallOverflow {};

struct SmallInt {
    std::int64_t v = 0;

    bool is_zero() const { return v == 0; }
    SmallInt& operator+=(SmallInt o)
    {
        if (__builtin_add_overflow(v, o.v, &v))
            throw SmallOverflow{};
        return *this;
    }
    SmallInt& operator*=(SmallInt o)
    {
        if (__builtin_mul_overflow(v, o.v, &v))
            throw SmallOverflow{};
        return *this;
    }
    friend SmallInt operator*(SmallInt a, SmallInt b) { return a *= b; }
};

struct SmallGauss {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    SmallGauss& operator+=(SmallGauss o)
    {
        if (__builtin_add_overflow(re, o.re, &re) || __builtin_add_overflow(im, o.im, &im))
            throw SmallOverflow{};
        return *this;
    }
    friend SmallGauss operator*(SmallGauss a, SmallGauss b)
    {
        std::int64_t p1, p2, p3, p4;
        SmallGauss r;
        if (__builtin_mul_overflow(a.re, b.re, &p1) || __builtin_mul_overflow(a.im, b.im, &p2) ||
            __builtin_mul_overflow(a.re, b.im, &p3) || __builtin_mul_overflow(a.im, b.re, &p4) ||
            __builtin_sub_overflow(p1, p2, &r.re) || __builtin_add_overflow(p3, p4, &r.im))
            throw SmallOverflow{};
        return r;
    }
    SmallGauss& operator*=(SmallGauss o) { return *this = *this * o; }
};

template <class Num>
struct Arith;

template <>
struct Arith<Scalar> {
    static Scalar zero(Ring ring) { return Scalar::zero(ring); }
    static Scalar one(Ring ring) { return Scalar::one(ring); }
    static const Scalar& lookup(const VertexModel& y, std::span<const int> alpha) { return y.value(alpha); }
    static Scalar to_scalar(const Scalar& x, Ring) { return x; }
};

template <>
struct Arith<SmallInt> {
    static SmallInt zero(Ring) { return {0}; }
    static SmallInt one(Ring) { return {1}; }
    static SmallInt lookup(const VertexModel& y, std::span<const int> alpha) { return {y.small_value(alpha).first}; }
    static Scalar to_scalar(SmallInt x, Ring ring) { return ring == Ring::gaussian ? Scalar::gaussian(x.v) : Scalar(x.v); }
};

template <>
struct Arith<SmallGauss> {
    static SmallGauss zero(Ring) { return {0, 0}; }
    static SmallGauss one(Ring) { return {1, 0}; }
    static SmallGauss lookup(const VertexModel& y, std::span<const int> alpha)
    {
        auto [re, im] = y.small_value(alpha);
        return {re, im};
    }
    static Scalar to_scalar(SmallGauss x, Ring) { return Scalar::gaussian(x.re, x.im); }
};

// Tensors carry their legs inline; this bounds the contraction width.
constexpr int kMaxLegs = 40;

template <class Num>
struct Tensor {
    int width = 0;
    std::array<int, kMaxLegs> legs{}; // edge ids, increasing; leg i has stride k^i
    std::vector<Num> data;
};

// Recycles tensor storage across contractions on this thread.
template <class Num>
class BufferPool {
public:
    std::vector<Num> take(std::size_t size, const Num& fill)
    {
        std::vector<Num> v;
        if (!free_.empty()) {
            v = std::move(free_.back());
            free_.pop_back();
        }
        v.assign(size, fill);
        return v;
    }
    void give(std::vector<Num>&& v)
    {
        if (free_.size() < 64)
            free_.push_back(std::move(v));
    }

private:
    std::vector<std::vector<Num>> free_;
};

template <class Num>
BufferPool<Num>& buffer_pool()
{
    thread_local BufferPool<Num> pool;
    return pool;
}

template <class Num>
Tensor<Num> vertex_tensor(const Network& net, int v, const VertexModel& joint, const PartitionLimits& limits,
                          std::vector<int>& counts)
{
    using A = Arith<Num>;
    const int k = net.colors;
    const auto ends = net.ends(v);
    Tensor<Num> t;
    std::array<int, kMaxLegs> open_side{};
    std::vector<std::pair<int, int>> loops; // sides of the two ends; rare
    for (std::size_t i = 0; i < ends.size(); ++i) {
        if (i + 1 < ends.size() && ends[i].edge == ends[i + 1].edge) {
            loops.emplace_back(ends[i].side, ends[i + 1].side);
            ++i;
            continue;
        }
        if (t.width >= limits.max_width || t.width >= kMaxLegs)
            throw CapExceeded("vertex " + std::to_string(v) + " has more than " +
                              std::to_string(std::min(limits.max_width, kMaxLegs)) +
                              " open edge-ends, above the contraction width cap");
        t.legs[static_cast<std::size_t>(t.width)] = ends[i].edge;
        open_side[static_cast<std::size_t>(t.width)] = ends[i].side;
        ++t.width;
    }

    const Ring ring = joint.ring();
    const std::size_t width = static_cast<std::size_t>(t.width);
    std::size_t size = ipow(static_cast<std::size_t>(k), width);
    t.data = buffer_pool<Num>().take(size, A::zero(ring));
    std::array<int, kMaxLegs> leg_color{};
    std::vector<int> loop_color(loops.size(), 0);
    // counts tracks the open legs incrementally; loops are added on top.
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < width; ++i)
        ++counts[static_cast<std::size_t>(open_side[i] * k)];
    for (std::size_t idx = 0; idx < size; ++idx) {
        if (loops.empty()) {
            t.data[idx] = A::lookup(joint, counts);
        } else {
            std::fill(loop_color.begin(), loop_color.end(), 0);
            Num sum = A::zero(ring);
            while (true) {
                for (std::size_t i = 0; i < loops.size(); ++i) {
                    ++counts[static_cast<std::size_t>(loops[i].first * k + loop_color[i])];
                    ++counts[static_cast<std::size_t>(loops[i].second * k + loop_color[i])];
                }
                sum += A::lookup(joint, counts);
                for (std::size_t i = 0; i < loops.size(); ++i) {
                    --counts[static_cast<std::size_t>(loops[i].first * k + loop_color[i])];
                    --counts[static_cast<std::size_t>(loops[i].second * k + loop_color[i])];
                }
                std::size_t pos = 0;
                while (pos < loops.size() && ++loop_color[pos] == k)
                    loop_color[pos++] = 0;
                if (pos == loops.size())
                    break;
            }
            t.data[idx] = std::move(sum);
        }
        std::size_t pos = 0;
        while (pos < width) {
            const int base = open_side[pos] * k;
            --counts[static_cast<std::size_t>(base + leg_color[pos])];
            if (++leg_color[pos] < k) {
                ++counts[static_cast<std::size_t>(base + leg_color[pos])];
                break;
            }
            leg_color[pos] = 0;
            ++counts[static_cast<std::size_t>(base)];
            ++pos;
        }
    }
    return t;
}

template <class Num>
std::size_t shared_count(const Tensor<Num>& a, const Tensor<Num>& b)
{
    std::size_t n = 0;
    int i = 0;
    int j = 0;
    while (i < a.width && j < b.width) {
        if (a.legs[static_cast<std::size_t>(i)] < b.legs[static_cast<std::size_t>(j)]) {
            ++i;
        } else if (b.legs[static_cast<std::size_t>(j)] < a.legs[static_cast<std::size_t>(i)]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

template <class Num>
Tensor<Num> contract_pair(const Tensor<Num>& a, const Tensor<Num>& b, int k, Ring ring, const PartitionLimits& limits)
{
    using A = Arith<Num>;
    const std::size_t uk = static_cast<std::size_t>(k);
    // Strides of the result legs in a and b (0 when absent), and of the
    // shared legs.
    std::array<std::size_t, kMaxLegs> ra{}, rb{}, sa{}, sb{};
    std::size_t shared = 0;
    Tensor<Num> r;
    {
        int i = 0;
        int j = 0;
        std::size_t pa = 1;
        std::size_t pb = 1;
        while (i < a.width || j < b.width) {
            int ea = i < a.width ? a.legs[static_cast<std::size_t>(i)] : std::numeric_limits<int>::max();
            int eb = j < b.width ? b.legs[static_cast<std::size_t>(j)] : std::numeric_limits<int>::max();
            if (ea == eb) {
                sa[shared] = pa;
                sb[shared] = pb;
                ++shared;
                pa *= uk;
                pb *= uk;
                ++i;
                ++j;
                continue;
            }
            if (r.width >= limits.max_width || r.width >= kMaxLegs)
                throw CapExceeded("contraction would create a tensor with more than " +
                                  std::to_string(std::min(limits.max_width, kMaxLegs)) +
                                  " open edge-ends, above the width cap");
            const std::size_t w = static_cast<std::size_t>(r.width);
            if (ea < eb) {
                r.legs[w] = ea;
                ra[w] = pa;
                rb[w] = 0;
                pa *= uk;
                ++i;
            } else {
                r.legs[w] = eb;
                ra[w] = 0;
                rb[w] = pb;
                pb *= uk;
                ++j;
            }
            ++r.width;
        }
    }

    const std::size_t width = static_cast<std::size_t>(r.width);
    std::size_t size = ipow(uk, width);
    r.data = buffer_pool<Num>().take(size, A::zero(ring));
    std::array<int, kMaxLegs> rc{};
    std::array<int, kMaxLegs> sc{};
    std::size_t base_a = 0;
    std::size_t base_b = 0;
    for (std::size_t idx = 0; idx < size; ++idx) {
        Num sum = A::zero(ring);
        std::fill(sc.begin(), sc.begin() + static_cast<std::ptrdiff_t>(shared), 0);
        std::size_t ia = base_a;
        std::size_t ib = base_b;
        while (true) {
            const Num& x = a.data[ia];
            if (!x.is_zero()) {
                const Num& y = b.data[ib];
                if (!y.is_zero())
                    sum += x * y;
            }
            std::size_t pos = 0;
            while (pos < shared && ++sc[pos] == k) {
                sc[pos] = 0;
                ia -= sa[pos] * (uk - 1);
                ib -= sb[pos] * (uk - 1);
                ++pos;
            }
            if (pos == shared)
                break;
            ia += sa[pos];
            ib += sb[pos];
        }
        r.data[idx] = std::move(sum);
        std::size_t pos = 0;
        while (pos < width && ++rc[pos] == k) {
            rc[pos] = 0;
            base_a -= ra[pos] * (uk - 1);
            base_b -= rb[pos] * (uk - 1);
            ++pos;
        }
        if (pos < width) {
            base_a += ra[pos];
            base_b += rb[pos];
        }
    }
    return r;
}

template <class Num>
Scalar contract_with(const Network& net, const VertexModel& joint, const EliminationOrder& order,
                     const PartitionLimits& limits)
{
    using A = Arith<Num>;
    const Ring ring = joint.ring();
    const int k = net.colors;
    auto& pool = buffer_pool<Num>();

    std::vector<Tensor<Num>> live;
    live.reserve(static_cast<std::size_t>(net.vertex_count));
    std::vector<int> counts(static_cast<std::size_t>(k * net.sides), 0);
    Num product = A::one(ring);
    for (int v = 0; v < net.vertex_count; ++v) {
        Tensor<Num> t = vertex_tensor<Num>(net, v, joint, limits, counts);
        if (t.width == 0) {
            product *= t.data[0];
            pool.give(std::move(t.data));
        } else {
            live.push_back(std::move(t));
        }
    }

    auto merge = [&](std::size_t i, std::size_t j) {
        Tensor<Num> merged = contract_pair(live[i], live[j], k, ring, limits);
        pool.give(std::move(live[i].data));
        pool.give(std::move(live[j].data));
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
        if (merged.width == 0) {
            product *= merged.data[0];
            pool.give(std::move(merged.data));
        } else {
            live.push_back(std::move(merged));
        }
    };

    if (order) {
        std::vector<char> named(static_cast<std::size_t>(net.edge_count), 0);
        for (int e : *order) {
            if (e < 0 || e >= net.edge_count)
                throw PreconditionError("elimination order names edge " + std::to_string(e) + ", graph has " +
                                        std::to_string(net.edge_count));
            if (named[static_cast<std::size_t>(e)]++)
                throw PreconditionError("elimination order names edge " + std::to_string(e) + " twice");
            std::size_t holders[2];
            std::size_t found = 0;
            for (std::size_t i = 0; i < live.size() && found < 2; ++i) {
                const auto* first = live[i].legs.data();
                const auto* last = first + live[i].width;
                if (std::binary_search(first, last, e))
                    holders[found++] = i;
            }
            if (found == 2)
                merge(holders[0], holders[1]);
        }
    }

    while (!live.empty()) {
        std::size_t best_i = 0;
        std::size_t best_j = 0;
        std::size_t best_width = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < live.size(); ++i) {
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                std::size_t shared = shared_count(live[i], live[j]);
                if (shared == 0)
                    continue;
                std::size_t w = static_cast<std::size_t>(live[i].width + live[j].width) - 2 * shared;
                if (w < best_width) {
                    best_width = w;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_width == std::numeric_limits<std::size_t>::max())
            throw Error("internal: dangling tensor legs during contraction");
        merge(best_i, best_j);
    }
    return A::to_scalar(product, ring);
}

// One color: every edge has color 1, so f = prod_v y_{deg(v)}.
Scalar single_color(const Network& net, const VertexModel& joint)
{
    Scalar product = Scalar::one(joint.ring());
    std::vector<int> counts(static_cast<std::size_t>(net.sides), 0);
    for (int v = 0; v < net.vertex_count && !product.is_zero(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const End& end : net.ends(v))
            ++counts[static_cast<std::size_t>(end.side)];
        product *= joint.value(counts);
    }
    return product;
}

Scalar contract(const Network& net, const VertexModel& joint, const EliminationOrder& order,
                const PartitionLimits& limits)
{
    check_model(net, joint);
    if (net.edge_count > 0 && net.colors == 0)
        return Scalar::zero(joint.ring());
    if (order)
        for (int e : *order)
            if (e < 0 || e >= net.edge_count)
                throw PreconditionError("elimination order names edge " + std::to_string(e) + ", graph has " +
                                        std::to_string(net.edge_count));
    if (net.colors == 1)
        return single_color(net, joint);
    if (joint.has_small_table()) {
        try {
            if (joint.ring() == Ring::gaussian)
                return contract_with<SmallGauss>(net, joint, order, limits);
            return contract_with<SmallInt>(net, joint, order, limits);
        } catch (const SmallOverflow&) {
            // fall through to exact arithmetic
        }
    }
    return contract_with<Scalar>(net, joint, order, limits);
}

} // namespace

Scalar partition_brute(const Multigraph& g, const VertexModel& y, const PartitionLimits& limits)
{
    return brute(network_of(g, y.colors()), y, limits);
}

Scalar partition_contract(const Multigraph& g, const VertexModel& y, const EliminationOrder& order,
                          const PartitionLimits& limits)
{
    return contract(network_of(g, y.colors()), y, order, limits);
}

Scalar partition(const Multigraph& g, const VertexModel& y, PartitionMethod method, const PartitionLimits& limits)
{
    return method == PartitionMethod::brute ? partition_brute(g, y, limits) : partition_contract(g, y, std::nullopt, limits);
}

Scalar directed_partition_brute(const DirectedMultigraph& g, const DirectedVertexModel& y,
                                const PartitionLimits& limits)
{
    return brute(network_of(g, y.colors()), y.joint(), limits);
}

Scalar directed_partition_contract(const DirectedMultigraph& g, const DirectedVertexModel& y,
                                   const EliminationOrder& order, const PartitionLimits& limits)
{
    return contract(network_of(g, y.colors()), y.joint(), order, limits);
}

Scalar directed_partition(const DirectedMultigraph& g, const DirectedVertexModel& y, PartitionMethod method,
                          const PartitionLimits& limits)
{
    return method == PartitionMethod::brute ? directed_partition_brute(g, y, limits)
                                            : directed_partition_contract(g, y, std::nullopt, limits);
}

MultiplicativityWitness multiplicativity_witness(const Multigraph& g, const Multigraph& h, const VertexModel& y,
                                                 PartitionMethod method)
{
    return {partition(g, y, method), partition(h, y, method), partition(disjoint_union(g, h), y, method)};
}

} // namespace vmodel
