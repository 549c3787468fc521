#pragma once

#include "hesskum/poly_matrix.hpp"
#include "hesskum/polynomial.hpp"

namespace hesskum {

// Sylvester matrix of p and q with respect to one variable, p's coefficient
// rows first, coefficients in descending degree. Both polynomials must have
// positive degree in that variable.
PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::size_t var);

// Resultant as the determinant of the Sylvester matrix above. With this row
// convention, resultant(x-u, x-v, x) = u - v, and the resultant vanishes
// exactly when p and q share a root in the variable over the algebraic
// closure of the coefficient field.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

}  // namespace hesskum
