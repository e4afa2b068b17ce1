#include "vmodel/model.hpp"

#include "vmodel/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace vmodel {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 20;

// C(a, b) with saturation, enough to size the dense table.
std::size_t binomial_saturating(std::size_t a, std::size_t b)
{
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
        if (r > kDenseLimit * 4)
            return kDenseLimit * 4;
    }
    return static_cast<std::size_t>(r);
}

void append_degree(int k, int remaining, std::vector<int>& prefix, std::vector<MultisetIndex>& out)
{
    if (static_cast<int>(prefix.size()) == k - 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        prefix.push_back(c);
        append_degree(k, remaining - c, prefix, out);
        prefix.pop_back();
    }
}

Scalar in_ring(const Scalar& v, Ring ring)
{
    if (ring == Ring::gaussian)
        return v.ring() == Ring::gaussian ? v : Scalar::gaussian(v.real());
    if (!v.imag().is_zero())
        throw PreconditionError("gaussian value " + v.to_string() + " in a rational model");
    return Scalar(v.real());
}

} // namespace

MultisetIndex::MultisetIndex(std::vector<int> counts) : counts_(std::move(counts))
{
    for (int c : counts_)
        if (c < 0)
            throw PreconditionError("multiset index with a negative entry");
}

int MultisetIndex::degree() const
{
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

MultisetIndex operator+(const MultisetIndex& a, const MultisetIndex& b)
{
    if (a.colors() != b.colors())
        throw PreconditionError("adding multiset indices of different length");
    std::vector<int> r(a.counts_);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b.counts_[i];
    return MultisetIndex(std::move(r));
}

std::vector<MultisetIndex> graded_indices(int k, int max_degree)
{
    std::vector<MultisetIndex> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> prefix;
    for (int d = 0; d <= max_degree; ++d)
        append_degree(k, d, prefix, out);
    return out;
}

VertexModel::VertexModel(int k, Ring ring, std::map<MultisetIndex, Scalar> entries, std::optional<int> degree_cap)
    : k_(k), ring_(ring), degree_cap_(degree_cap), zero_(Scalar::zero(ring))
{
    if (k < 0)
        throw PreconditionError("negative color count");
    if (degree_cap && *degree_cap < 0)
        throw PreconditionError("negative degree cap");
    std::map<MultisetIndex, Scalar> clean;
    for (auto& [alpha, v] : entries) {
        if (alpha.colors() != k)
            throw PreconditionError("model entry has " + std::to_string(alpha.colors()) + " coordinates, expected " +
                                    std::to_string(k));
        if (v.is_zero())
            continue;
        if (degree_cap && alpha.degree() > *degree_cap)
            throw PreconditionError("model entry exceeds the declared degree cap");
        max_degree_ = std::max(max_degree_, alpha.degree());
        clean.emplace(alpha, in_ring(v, ring));
    }
    entries_ = std::make_shared<const std::map<MultisetIndex, Scalar>>(std::move(clean));

    std::size_t size = binomial_saturating(static_cast<std::size_t>(max_degree_ + k), static_cast<std::size_t>(k));
    if (size <= kDenseLimit) {
        auto binom = std::make_shared<std::vector<std::vector<std::size_t>>>();
        for (int a = 0; a <= max_degree_ + k; ++a) {
            binom->emplace_back(static_cast<std::size_t>(k) + 1, 0);
            for (int b = 0; b <= k; ++b)
                (*binom)[a][b] = binomial_saturating(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
        binom_ = std::move(binom);
        auto dense = std::make_shared<std::vector<Scalar>>(size, zero_);
        for (const auto& [alpha, v] : *entries_)
            (*dense)[rank(alpha.counts())] = v;
        dense_ = std::move(dense);

        constexpr std::int64_t bound = std::int64_t{1} << 24;
        auto small_part = [&](const Rational& r, std::int64_t& out) {
            if (!r.is_integer() || r.is_big())
                return false;
            out = r.numerator();
            return out < bound && out > -bound;
        };
        auto small = std::make_shared<std::vector<SmallValue>>(size, SmallValue{0, 0});
        bool ok = true;
        for (const auto& [alpha, v] : *entries_) {
            auto& slot = (*small)[rank(alpha.counts())];
            if (!small_part(v.real(), slot.first) || !small_part(v.imag(), slot.second)) {
                ok = false;
                break;
            }
        }
        if (ok)
            small_ = std::move(small);
    }
}

// Suffix sums s_0 >= s_1 >= ... shifted to a strictly decreasing k-subset
// of [0, D + k), ranked in the combinatorial number system.
std::size_t VertexModel::rank(std::span<const int> alpha) const
{
    std::size_t r = 0;
    int suffix = 0;
    for (int j = k_ - 1; j >= 0; --j) {
        suffix += alpha[static_cast<std::size_t>(j)];
        int c = suffix + (k_ - 1 - j);
        r += (*binom_)[static_cast<std::size_t>(c)][static_cast<std::size_t>(k_ - j)];
    }
    return r;
}

const Scalar& VertexModel::value(std::span<const int> alpha) const
{
    if (static_cast<int>(alpha.size()) != k_)
        throw PreconditionError("model lookup with wrong index length");
    int degree = 0;
    for (int a : alpha)
        degree += a;
    if (degree > max_degree_)
        return zero_;
    if (dense_)
        return (*dense_)[rank(alpha)];
    auto it = entries_->find(MultisetIndex(std::vector<int>(alpha.begin(), alpha.end())));
    return it == entries_->end() ? zero_ : it->second;
}

DirectedVertexModel::DirectedVertexModel(int k, Ring ring,
                                         const std::map<std::pair<MultisetIndex, MultisetIndex>, Scalar>& entries,
                                         std::optional<int> degree_cap)
{
    std::map<MultisetIndex, Scalar> joint;
    for (const auto& [key, v] : entries) {
        const auto& [in, out] = key;
        if (in.colors() != k || out.colors() != k)
            throw PreconditionError("directed model entry has the wrong number of colors");
        std::vector<int> c(in.counts().begin(), in.counts().end());
        c.insert(c.end(), out.counts().begin(), out.counts().end());
        joint.emplace(MultisetIndex(std::move(c)), v);
    }
    joint_ = VertexModel(2 * k, ring, std::move(joint), degree_cap);
}

DirectedVertexModel DirectedVertexModel::from_joint(VertexModel joint)
{
    if (joint.colors() % 2 != 0)
        throw PreconditionError("a directed model needs an even number of joint coordinates");
    DirectedVertexModel d;
    d.joint_ = std::move(joint);
    return d;
}

const Scalar& DirectedVertexModel::value(const MultisetIndex& in, const MultisetIndex& out) const
{
    std::vector<int> c(in.counts().begin(), in.counts().end());
    c.insert(c.end(), out.counts().begin(), out.counts().end());
    return joint_.value(c);
}

MomentSlice moment_slice(const VertexModel& y, int max_degree)
{
    if (max_degree < 0)
        throw PreconditionError("moment slice degree must be non-negative");
    MomentSlice m;
    m.colors = y.colors();
    m.max_degree = max_degree;
    m.indices = graded_indices(y.colors(), max_degree);
    m.matrix = ScalarMatrix(m.indices.size(), m.indices.size(), Scalar::zero(y.ring()));
    for (std::size_t i = 0; i < m.indices.size(); ++i)
        for (std::size_t j = 0; j < m.indices.size(); ++j)
            m.matrix(i, j) = y.value(m.indices[i] + m.indices[j]);
    return m;
}

VertexModel rank_r_model(int k, const std::vector<std::vector<Scalar>>& points, const std::vector<Scalar>& coeffs,
                         int degree_cap)
{
    if (points.size() != coeffs.size())
        throw PreconditionError("rank_r_model: point and coefficient counts differ");
    Ring ring = Ring::rational;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != k)
            throw PreconditionError("rank_r_model: point of wrong dimension");
        for (const auto& x : p)
            if (x.ring() == Ring::gaussian)
                ring = Ring::gaussian;
    }
    for (const auto& c : coeffs)
        if (c.ring() == Ring::gaussian)
            ring = Ring::gaussian;

    // powers[j][i][e] = points[j][i]^e
    std::vector<std::vector<std::vector<Scalar>>> powers(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (int i = 0; i < k; ++i) {
            std::vector<Scalar> pw{Scalar::one(ring)};
            for (int e = 1; e <= degree_cap; ++e)
                pw.push_back(pw.back() * points[j][static_cast<std::size_t>(i)]);
            powers[j].push_back(std::move(pw));
        }
    }
    std::map<MultisetIndex, Scalar> entries;
    for (const auto& alpha : graded_indices(k, degree_cap)) {
        Scalar sum = Scalar::zero(ring);
        for (std::size_t j = 0; j < points.size(); ++j) {
            Scalar term = coeffs[j];
            for (int i = 0; i < k; ++i)
                term *= powers[j][static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha[static_cast<std::size_t>(i)])];
            sum += term;
        }
        if (!sum.is_zero())
            entries.emplace(alpha, sum);
    }
    return VertexModel(k, ring, std::move(entries), degree_cap);
}

bool model_truncation_check(const VertexModel& y, int needed_degree)
{
    return y.determines_degree(needed_degree);
}

namespace models {

VertexModel matching(int max_degree)
{
    std::map<MultisetIndex, Scalar> entries;
    for (const auto& alpha : graded_indices(2, max_degree))
        if (alpha[1] <= 1)
            entries.emplace(alpha, Scalar(1));
    return VertexModel(2, Ring::rational, std::move(entries), max_degree);
}

VertexModel sign(int max_degree)
{
    const Scalar i = Scalar::gaussian(0, 1);
    std::map<MultisetIndex, Scalar> entries;
    Scalar power = Scalar::one(Ring::gaussian);
    for (int d = 0; d <= max_degree; ++d) {
        entries.emplace(MultisetIndex({d}), power);
        power *= i;
    }
    return VertexModel(1, Ring::gaussian, std::move(entries), max_degree);
}

VertexModel constant(int k, const Scalar& value, int max_degree)
{
    std::map<MultisetIndex, Scalar> entries;
    for (const auto& alpha : graded_indices(k, max_degree))
        entries.emplace(alpha, value);
    return VertexModel(k, value.ring(), std::move(entries), max_degree);
}

} // namespace models

} // namespace vmodel
