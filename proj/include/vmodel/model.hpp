#pragma once

#include "vmodel/linalg.hpp"
#include "vmodel/scalar.hpp"

#include <compare>
#include <cstdint>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vmodel {

// A multiset of colors from [k], stored as its incidence vector in N^k.
class MultisetIndex {
public:
    MultisetIndex() = default;
    explicit MultisetIndex(std::vector<int> counts);
    static MultisetIndex zero(int k) { return MultisetIndex(std::vector<int>(static_cast<std::size_t>(k), 0)); }

    int colors() const { return static_cast<int>(counts_.size()); }
    int degree() const;
    std::span<const int> counts() const { return counts_; }
    int operator[](std::size_t i) const { return counts_[i]; }

    friend MultisetIndex operator+(const MultisetIndex& a, const MultisetIndex& b);
    friend bool operator==(const MultisetIndex&, const MultisetIndex&) = default;
    friend auto operator<=>(const MultisetIndex&, const MultisetIndex&) = default;

private:
    std::vector<int> counts_;
};

// All alpha in N^k with |alpha| <= d, by degree and then descending
// lexicographic order (x1 > x2 > ... > xk).
std::vector<MultisetIndex> graded_indices(int k, int max_degree);

// A k-color vertex model y: N^k -> F, sparse with absent entries meaning 0.
//
// `degree_cap`, when set, declares that only entries with |alpha| <= cap are
// known; evaluating graphs with larger vertex degree is then an error.
class VertexModel {
public:
    VertexModel() : VertexModel(0, Ring::rational, {}) {}
    VertexModel(int k, Ring ring, std::map<MultisetIndex, Scalar> entries,
                std::optional<int> degree_cap = std::nullopt);

    int colors() const { return k_; }
    Ring ring() const { return ring_; }
    std::optional<int> degree_cap() const { return degree_cap_; }
    const std::map<MultisetIndex, Scalar>& entries() const { return *entries_; }
    int max_stored_degree() const { return max_degree_; }

    // y_alpha; `alpha` must have length k.
    const Scalar& value(std::span<const int> alpha) const;
    const Scalar& value(const MultisetIndex& alpha) const { return value(alpha.counts()); }

    // True when the model determines every y_alpha with |alpha| <= degree.
    bool determines_degree(int degree) const { return !degree_cap_ || *degree_cap_ >= degree; }

    // Machine-integer copy of the dense table, present when every entry is a
    // (Gaussian) integer of absolute value below 2^24.
    using SmallValue = std::pair<std::int64_t, std::int64_t>;
    bool has_small_table() const { return small_ != nullptr; }
    SmallValue small_value(std::span<const int> alpha) const
    {
        int degree = 0;
        std::size_t r = 0;
        const auto& binom = *binom_;
        for (int j = k_ - 1; j >= 0; --j) {
            degree += alpha[static_cast<std::size_t>(j)];
            r += binom[static_cast<std::size_t>(degree + (k_ - 1 - j))][static_cast<std::size_t>(k_ - j)];
        }
        return degree > max_degree_ ? SmallValue{0, 0} : (*small_)[r];
    }

private:
    std::size_t rank(std::span<const int> alpha) const;

    int k_ = 0;
    Ring ring_ = Ring::rational;
    std::optional<int> degree_cap_;
    int max_degree_ = 0;
    Scalar zero_;
    std::shared_ptr<const std::map<MultisetIndex, Scalar>> entries_;
    // Dense copy indexed by a combinatorial ranking of {alpha : |alpha| <= max_degree_}.
    std::shared_ptr<const std::vector<Scalar>> dense_;
    std::shared_ptr<const std::vector<std::vector<std::size_t>>> binom_;
    std::shared_ptr<const std::vector<SmallValue>> small_;
};

// Directed model on concatenated (in, out) indices: a 2k-color model read as
// pairs. The joint model is exposed so moment machinery applies unchanged.
class DirectedVertexModel {
public:
    DirectedVertexModel() = default;
    DirectedVertexModel(int k, Ring ring, const std::map<std::pair<MultisetIndex, MultisetIndex>, Scalar>& entries,
                        std::optional<int> degree_cap = std::nullopt);
    // Wraps a 2k-color model; its first k coordinates are the in-colors.
    static DirectedVertexModel from_joint(VertexModel joint);

    int colors() const { return joint_.colors() / 2; }
    Ring ring() const { return joint_.ring(); }
    const VertexModel& joint() const { return joint_; }
    const Scalar& value(const MultisetIndex& in, const MultisetIndex& out) const;

private:
    VertexModel joint_;
};

// Finite slice of the moment matrix (y_{alpha+beta}) over |alpha|, |beta| <= d.
struct MomentSlice {
    int colors = 0;
    int max_degree = 0;
    std::vector<MultisetIndex> indices;
    ScalarMatrix matrix;
};

MomentSlice moment_slice(const VertexModel& y, int max_degree);

// y_alpha = sum_j coeffs[j] * prod_i points[j][i]^alpha_i for |alpha| <= degree_cap.
// The moment matrix is then a Gram matrix of rank at most points.size().
VertexModel rank_r_model(int k, const std::vector<std::vector<Scalar>>& points, const std::vector<Scalar>& coeffs,
                         int degree_cap);

bool model_truncation_check(const VertexModel& y, int needed_degree);

// Named models, materialized up to a degree cap.
namespace models {
// k = 2, y_alpha = 1 if alpha_2 <= 1: color 2 marks a matching.
VertexModel matching(int max_degree);
// k = 1, y_d = i^d, so that f_y(G) = (-1)^|E(G)|.
VertexModel sign(int max_degree);
// y_alpha = value for every |alpha| <= max_degree.
VertexModel constant(int k, const Scalar& value, int max_degree);
} // namespace models

} // namespace vmodel
