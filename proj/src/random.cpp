#include "vmodel/random.hpp"

#include "vmodel/error.hpp"

#include <algorithm>
#include <limits>

namespace vmodel {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw PreconditionError("empty random range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::int64_t>(next());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
}

namespace {

template <bool D>
BasicMultigraph<D> random_multigraph(Rng& rng, const GraphShape& shape)
{
    int n = static_cast<int>(rng.uniform(shape.min_vertices, shape.max_vertices));
    int m = n == 0 ? 0 : static_cast<int>(rng.uniform(0, shape.max_edges));
    std::vector<std::pair<int, int>> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(rng.uniform(0, n - 1));
        int v = static_cast<int>(rng.uniform(0, n - 1));
        if (u == v && !shape.loops) {
            if (n == 1)
                break;
            continue;
        }
        edges.emplace_back(u, v);
    }
    return BasicMultigraph<D>(n, std::move(edges));
}

} // namespace

Multigraph random_graph(Rng& rng, const GraphShape& shape)
{
    return random_multigraph<false>(rng, shape);
}

DirectedMultigraph random_digraph(Rng& rng, const GraphShape& shape)
{
    return random_multigraph<true>(rng, shape);
}

Scalar random_scalar(Rng& rng, Ring ring, int magnitude, bool integral)
{
    auto part = [&]() {
        std::int64_t num = rng.uniform(-magnitude, magnitude);
        std::int64_t den = !integral && rng.coin(1, 4) ? rng.uniform(2, 3) : 1;
        return Rational(num, den);
    };
    if (ring == Ring::gaussian) {
        Rational re = part();
        return Scalar::gaussian(re, part());
    }
    return Scalar(part());
}

VertexModel random_model(Rng& rng, int k, Ring ring, int max_degree, bool integral)
{
    std::map<MultisetIndex, Scalar> entries;
    for (const auto& alpha : graded_indices(k, max_degree))
        entries.emplace(alpha, random_scalar(rng, ring, 3, integral));
    return VertexModel(k, ring, std::move(entries), max_degree);
}

DirectedVertexModel random_directed_model(Rng& rng, int k, Ring ring, int max_degree, bool integral)
{
    return DirectedVertexModel::from_joint(random_model(rng, 2 * k, ring, max_degree, integral));
}

VertexModel random_rank_r_model(Rng& rng, int k, int r, Ring ring, int degree_cap)
{
    std::vector<std::vector<Scalar>> points;
    std::vector<Scalar> coeffs;
    for (int j = 0; j < r; ++j) {
        auto draw = [&] {
            std::vector<Scalar> point;
            for (int i = 0; i < k; ++i) {
                Scalar a(rng.uniform(-2, 2));
                if (ring == Ring::gaussian)
                    a = Scalar::gaussian(a.real(), Rational(rng.uniform(-1, 1)));
                point.push_back(a);
            }
            return point;
        };
        // Redraw repeated points (a few times) so the rank is usually exactly r.
        std::vector<Scalar> point = draw();
        for (int attempt = 0; attempt < 16 && std::find(points.begin(), points.end(), point) != points.end(); ++attempt)
            point = draw();
        points.push_back(std::move(point));
        std::int64_t c = 0;
        while (c == 0)
            c = rng.uniform(-3, 3);
        coeffs.emplace_back(c);
    }
    return rank_r_model(k, points, coeffs, degree_cap);
}

PinMap random_pins(Rng& rng, int n, int size, bool avoid_pins)
{
    if (size > n || (avoid_pins && size >= n && size > 0))
        throw PreconditionError("not enough vertices for the requested pins");
    std::vector<int> vertices(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        vertices[static_cast<std::size_t>(i)] = i;
    // Partial Fisher-Yates.
    for (int i = 0; i < size; ++i) {
        int j = static_cast<int>(rng.uniform(i, n - 1));
        std::swap(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
    }
    std::vector<int> pins(vertices.begin(), vertices.begin() + size);
    std::sort(pins.begin(), pins.end());
    std::vector<int> targets;
    for (int i = 0; i < size; ++i) {
        if (avoid_pins)
            targets.push_back(vertices[static_cast<std::size_t>(rng.uniform(size, n - 1))]);
        else
            targets.push_back(static_cast<int>(rng.uniform(0, n - 1)));
    }
    return PinMap(std::move(pins), std::move(targets));
}

} // namespace vmodel
