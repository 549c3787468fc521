#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hesskum/labels.hpp"
#include "hesskum/poly_matrix.hpp"
#include "hesskum/polynomial.hpp"

namespace hesskum {

// The five pentahedral coefficients mu_0..mu_4, all nonzero. They define the
// cubic surface V(sum 1/mu_i X_i^3) on the hyperplane sum X_i = 0 and its
// Hessian quartic. Everything downstream works in the chart where X4 is
// eliminated via X4 = -(X0+X1+X2+X3).
struct PentahedralData {
  std::array<Rational, 5> mu;

  explicit PentahedralData(std::array<Rational, 5> m);
  static PentahedralData parse_csv(std::string_view csv);  // "p/q,p/q,p/q,p/q,p/q"
  std::string csv() const;
};

// Shared variable tables. The X4-eliminated chart {X0..X3} is the default
// home of every projective computation.
const RingPtr& x_ring();     // X0..X3
const RingPtr& x5_ring();    // X0..X4
const RingPtr& mu_ring();    // mu0..mu4
const RingPtr& xmu_ring();   // X0..X3, mu0..mu4
const RingPtr& uv_ring();    // u, v (line parameter)
const RingPtr& uvmu_ring();  // u, v, mu0..mu4

// sum 1/mu_i X_i^3 with X4 eliminated; homogeneous cubic in X0..X3.
MultiPoly pentahedral_cubic(const PentahedralData& d);

// sum mu_i prod_{j!=i} X_j with X4 eliminated; homogeneous quartic.
MultiPoly hessian_closed_form(const PentahedralData& d);
// Same with mu0..mu4 kept symbolic (ring xmu_ring()).
const MultiPoly& hessian_closed_form_symbolic();

// 4x4 matrix of second partials of the pentahedral cubic in X0..X3.
PolyMatrix hessian_matrix(const PentahedralData& d);

// Constant c with det(hessian_matrix) = c * hessian_closed_form; throws
// std::logic_error if the two polynomials are not proportional.
Rational verify_hessian_identity(const PentahedralData& d);

std::vector<LineLabel> all_lines();  // the ten l_{ij}, 0 <= i < j <= 4
std::vector<NodeLabel> all_nodes();  // the ten p_{ijk}

// Chart coordinates (X0..X3) of a node.
std::array<Rational, 4> node_chart_point(const NodeLabel& n);

// Linear parameterization of a line in chart coordinates. The target ring
// must contain variables "u" and "v"; each returned entry is linear in them.
std::array<MultiPoly, 4> line_chart_param(const LineLabel& l, const RingPtr& ring);

// Dimension of the space of quartic forms in X0..X3 vanishing on the given
// lines (by default all ten); the ten-line answer must be 5.
int vanishing_quartics_dimension();
int vanishing_quartics_dimension(const std::vector<LineLabel>& lines);

// The 35 degree-4 exponent vectors over X0..X3, graded-lex ascending; the
// column order of the vanishing-quartics condition matrix.
const std::vector<Exponents>& quartic_monomials();

// Coordinates of a quartic form in the quartic_monomials() basis.
std::vector<Rational> quartic_coordinates(const MultiPoly& q);

// Discriminant of H in X3 and the symmetrized product E_s * E_sbar of the
// two branch cubics; `ratio` is the exact constant discriminant / product.
// Throws std::logic_error if the two fail to be proportional.
struct BranchSextic {
  MultiPoly product;  // in x_ring(), only X0..X2 occur
  Rational ratio;
};
BranchSextic branch_sextic_factorization(const PentahedralData& d);

// Restriction of H to the tangent plane mu_j X_i + mu_i X_j = 0, in plane
// coordinates (X_p, X_q, X_i) where p < q < r are the complementary indices:
// X_j = -(mu_j/mu_i) X_i and X_r = -X_p - X_q - ((mu_i-mu_j)/mu_i) X_i.
// Returns (L, C) with H|plane = L^2 * C exactly and L the form cutting
// l_{ij}; C is the residual conic. Throws on factorization failure.
std::pair<MultiPoly, MultiPoly> tangent_plane_section(const PentahedralData& d, int i, int j);

// Sample-point smoothness heuristic: checks that the gradient of H vanishes
// at the ten nodes and at no random sample point on H (when one is found).
// Incomplete by design; a clean pass does not prove the cubic smooth.
bool nodal_smoothness_heuristic(const PentahedralData& d, unsigned seed);

}  // namespace hesskum
