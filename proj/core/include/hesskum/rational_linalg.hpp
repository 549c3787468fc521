#pragma once

#include <vector>

#include "hesskum/rational.hpp"

namespace hesskum {

// Dense exact-rational matrix helpers: enough Gaussian elimination for rank,
// kernel and determinant work over Q. Row-major.
using QMatrix = std::vector<std::vector<Rational>>;

std::size_t qmat_rank(QMatrix m);

// Basis of the right kernel {v : M v = 0}.
std::vector<std::vector<Rational>> qmat_kernel(QMatrix m);

Rational qmat_det(QMatrix m);

QMatrix qmat_mul(const QMatrix& a, const QMatrix& b);

}  // namespace hesskum
