#pragma once

#include "homlink/rational.hpp"

#include <vector>

namespace homlink {

/* Dense exact linear algebra over Q, row-major. */
using QMatrix = std::vector<std::vector<Rational>>;

/* In-place reduced row echelon form; returns the rank. Pivot choice is the
 * first nonzero entry scanning top-to-bottom, so results are deterministic. */
size_t rref(QMatrix& A);

size_t rank(QMatrix A);

} // namespace homlink
