#pragma once

#include "vmodel/scalar.hpp"

#include <cstddef>
#include <vector>

namespace vmodel {

// Dense row-major matrix of exact scalars.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar())
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const;

    ScalarMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Rank over Q or Q[i] by fraction-free (Bareiss) elimination. Every entry
// must carry the same ring tag; mixing throws PreconditionError.
std::size_t exact_rank(ScalarMatrix m);

} // namespace vmodel
