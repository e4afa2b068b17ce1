#include "vmodel/linalg.hpp"

#include "vmodel/error.hpp"

#include <utility>

namespace vmodel {

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw PreconditionError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

bool ScalarMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!((*this)(i, j) == (*this)(j, i)))
                return false;
    return true;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    ScalarMatrix r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r(i, j) = (*this)(rows[i], cols[j]);
    return r;
}

std::size_t exact_rank(ScalarMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;
    Ring ring = m(0, 0).ring();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m(i, j).ring() != ring)
                throw PreconditionError("exact_rank: matrix mixes rational and gaussian entries");

    // Bareiss: after step r every remaining entry is an (r+1)-minor of the
    // input, so the division by the previous pivot is exact.
    Scalar previous = Scalar::one(ring);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(rank, j));
        const Scalar p = m(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Scalar lead = m(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                Scalar v = p * m(i, j);
                if (!lead.is_zero())
                    v -= lead * m(rank, j);
                m(i, j) = v / previous;
            }
            m(i, col) = Scalar::zero(ring);
        }
        previous = p;
        ++rank;
    }
    return rank;
}

} // namespace vmodel
