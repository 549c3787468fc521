#include "hesskum/resultant.hpp"

#include <stdexcept>

namespace hesskum {

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  const int m = p.degree_in(var);
  const int n = q.degree_in(var);
  if (m < 1 || n < 1)
    throw std::invalid_argument("sylvester_matrix: both polynomials must have positive degree in the variable");
  const RingPtr& ring = p.ring();
  const std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, size, ring);
  // n shifted rows of p's coefficients (descending), then m rows of q's.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s.at(r, r + k) = p.coeff_in(var, static_cast<unsigned>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s.at(n + r, r + k) = q.coeff_in(var, static_cast<unsigned>(n - k));
  return s;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  return sylvester_matrix(p, q, var).determinant();
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  return resultant(p, q, p.ring()->require(var));
}

}  // namespace hesskum
