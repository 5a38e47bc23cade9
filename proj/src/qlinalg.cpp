#include "homlink/qlinalg.hpp"

namespace homlink {

size_t rref(QMatrix& A)
{
    if (A.empty())
        return 0;
    size_t rows = A.size(), cols = A[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && is_zero(A[pivot][col]))
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(A[rank], A[pivot]);
        Rational inv = 1 / A[rank][col];
        for (size_t c = col; c < cols; ++c)
            A[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || is_zero(A[r][col]))
                continue;
            Rational f = A[r][col];
            for (size_t c = col; c < cols; ++c)
                A[r][c] -= f * A[rank][c];
        }
        ++rank;
    }
    return rank;
}

size_t rank(QMatrix A)
{
    return rref(A);
}

} // namespace homlink
