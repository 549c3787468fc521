#pragma once

#include <array>

#include "hesskum/kummer.hpp"
#include "hesskum/pentahedral.hpp"
#include "hesskum/poly_matrix.hpp"
#include "hesskum/rational_linalg.hpp"

namespace hesskum {

// The two published branch-point parameterizations: S5 uses the normalization
// {c=0, d=-1, f=inf}, S1 the earlier display with {c=0, d=1, f=inf}. Both
// are implemented exactly as published; S5 is the default (its inverse is
// stated alongside it and round-trips exactly).
enum class Variant { S5, S1 };

Rational variant_d_value(Variant v);  // -1 or 1

// A genus 2 curve as a double cover of P^1 branched at a, b, c=0, d, e,
// f=inf. Validated: a, b, e pairwise distinct and different from 0 and d.
struct BranchTriple {
  Rational a, b, e;
  Variant variant = Variant::S5;

  BranchTriple(Rational a_, Rational b_, Rational e_, Variant v = Variant::S5);
};

// mu0 = a(b+1), mu1 = e(a+1), mu2 = b(a-e), mu3 = e-b, mu4 = (a-b)(e+1)
// for S5; the 1-b / 1-a / e-a / 1-e display for S1. Throws
// std::domain_error("degenerate pentahedron ...") naming the vanishing index.
PentahedralData branch_to_mu(const BranchTriple& t);

// The published inverse maps. Preconditions: F(mu) = 0 (else "not on Kummer
// locus"), nonzero denominators, and the resulting six branch points
// distinct (else "degenerate curve").
BranchTriple mu_to_branch(const PentahedralData& mu, Variant v = Variant::S5);

// Point of P^4 with coordinate sum zero, not all zero.
struct ProjectivePoint5 {
  std::array<Rational, 5> x;

  explicit ProjectivePoint5(std::array<Rational, 5> coords);
  std::array<Rational, 4> chart() const { return {x[0], x[1], x[2], x[3]}; }
};

// The quadric R = (mu1 X2 + mu2 X1)(mu3 X4 + mu4 X3)
//   + alpha (mu0 X3X4 + mu3 X0X4 + mu4 X0X3)
//   + beta (mu0 X1X2 + mu1 X0X2 + mu2 X0X1) + alpha beta X0^2,
// beta = 2 mu3 mu4 / (mu0+mu3+mu4-mu1-mu2). Throws if alpha or beta is
// undefined.
Rational beta_of(const PentahedralData& mu);
MultiPoly r_quadric_form(const PentahedralData& mu);  // X4 eliminated, x_ring()

// Symmetric 4x4 matrix of the quadratic form above (chart coordinates).
QMatrix r_quadric_matrix(const PentahedralData& mu);

// Same with symbolic mu, alpha and beta substituted as rational functions
// and the common denominator cleared: entries are polynomials in mu0..mu4.
// det == 0 identically, and the singular point
// [mu1+mu2-mu3-mu4 : -mu1 : -mu2 : mu3 : mu4] spans the kernel.
PolyMatrix r_quadric_matrix_symbolic();
std::array<MultiPoly, 4> r_singular_point_symbolic();  // chart coords, xmu_ring()

// Rank of the 4x4 matrix: always <= 3; <= 2 exactly on F(mu) = 0.
int r_rank_dichotomy(const PentahedralData& mu);

// The five points spanning the conic plane of a given cyclic order, obtained
// from the base (03214) point table by the relabelling sending the base
// sequence (0,3,2,1,4) to the canonical rotation of the requested order.
std::array<ProjectivePoint5, 5> plane_points(const PentahedralData& mu, const CyclicOrder& order);

// Same, coordinates as linear forms in mu over mu_ring(); row-major 5x5.
PolyMatrix plane_points_symbolic(const CyclicOrder& order);

// The linear form c0 X0 + ... + c3 X3 (chart) vanishing on all five points.
// Requires the 5x4 chart matrix to have rank exactly 3 ("points not
// coplanar" otherwise); built from the signed 3x3 minors of the first
// independent row triple in the documented minor order.
std::array<Rational, 4> plane_equation(const std::array<ProjectivePoint5, 5>& pts);

// Same construction over symbolic mu: coefficients are cubics in mu.
std::array<MultiPoly, 4> plane_equation_symbolic(const CyclicOrder& order);

// A point of the line l01 = V(X0, X1), projectively (X2 : X3); the affine
// coordinate z = X2/X3 places p012 at 0, p014 at -1 and p013 at infinity.
struct LinePoint {
  Rational u, v;  // (X2 : X3)
  bool is_infinity() const { return v.is_zero(); }
  Rational affine() const { return u / v; }  // z = X2/X3
};

// The three nodes on l01 and the intersections of the conic planes
// (01432), (01324), (03421) with l01. On the Kummer locus these six points,
// read in the coordinate z = X2/X3 with the frozen node assignment
// p012 -> c = 0, p014 -> d = -1, p013 -> f = inf, are exactly
// (a, b, 0, -1, e, inf) for (a,b,e) = mu_to_branch(mu, S5).
struct TropeSixPoints {
  LinePoint node_p012, node_p013, node_p014;
  LinePoint conic_a;  // plane (01432)
  LinePoint conic_b;  // plane (01324)
  LinePoint conic_e;  // plane (03421)
};
TropeSixPoints trope_six_points(const PentahedralData& mu);

}  // namespace hesskum
