#pragma once

#include <string>

#include "hesskum/pentahedral.hpp"
#include "hesskum/polynomial.hpp"

namespace hesskum {

// Working ring of the one-time symbolic derivation: the pencil parameter
// alpha, the conjugate roots s, sb of s^2 - 2(mu3+mu4)s + (mu3-mu4)^2, their
// elementary symmetric stand-ins e1, e2, and the five mu's.
const RingPtr& st_ring();  // alpha, s, sb, e1, e2, mu0..mu4

// The quadratic T(s, alpha) = 4 mu0 alpha^2
//   + [(s-mu0)^2 + (mu2-mu1)^2 - 2(s+mu0)(mu2+mu1)] alpha + 4 s mu1 mu2,
// with the first argument the variable named here ("s" or "sb").
MultiPoly t_quadratic_symbolic(std::string_view s_name);

// Rewrites a polynomial of st_ring() that is symmetric under s <-> sb in
// terms of e1 = s + sb and e2 = s * sb. Throws std::logic_error if an
// asymmetric remainder survives.
MultiPoly rewrite_symmetric_in_s(MultiPoly p);

// The cubic condition F in mu0..mu4, S5-symmetric and homogeneous. Ground
// truth is Res_alpha(T(s,.), T(sb,.)) symmetrized and divided by
// 512 mu0 mu1 mu2 mu3 mu4; the quotient is computed once and cached.
struct CubicCondition {
  MultiPoly F;  // over mu_ring()
};
const CubicCondition& derive_condition();

// F evaluated at concrete coefficients; zero exactly on the Kummer locus.
Rational cubic_condition(const PentahedralData& mu);

bool is_kummer_hessian(const PentahedralData& mu);

// alpha = 2 mu1 mu2 / (mu0+mu1+mu2-mu3-mu4); throws std::domain_error
// ("alpha undefined") on a vanishing denominator.
Rational alpha_of(const PentahedralData& mu);

// The three alpha-coefficients of T as polynomials in s (ring {"s"}).
struct TQuadratic {
  MultiPoly lead, middle, constant;
};
TQuadratic t_quadratic(const PentahedralData& mu);

// The published closed form of the cubic condition admits two readings of
// its triple sum: unordered triples {i,j,k} (10 terms) or ordered triples
// (60 terms). Builds each and compares against ground truth up to a
// nonzero scalar.
MultiPoly closed_form_reading_unordered();
MultiPoly closed_form_reading_ordered();
struct ClosedFormReport {
  std::string matching_reading;  // "unordered-triples" or "ordered-triples"
  Rational scalar;               // ground truth F = scalar * reading
};
ClosedFormReport closed_form_condition_check();

// Desk-scale evidence that F is irreducible over Q: F has no rational
// linear factor. A cubic form factors over Q only with a linear factor, so
// one restriction to a 2-plane with no rational root settles it; geometric
// irreducibility over the closure is taken from the source result.
bool cubic_condition_has_no_rational_linear_factor();

}  // namespace hesskum
