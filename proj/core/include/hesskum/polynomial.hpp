#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hesskum/rational.hpp"

namespace hesskum {

// Ordered table of variable names. Polynomials over the same table are
// compatible; mixing tables is an error, never an implicit coercion.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

using Exponents = std::vector<unsigned>;

// Graded lexicographic: total degree first, ties broken by the exponent
// vector itself (earlier variables weigh more).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact Rational coefficients.
// Invariant: no stored term has a zero coefficient; every exponent vector
// has length ring->size().
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly var(RingPtr ring, std::size_t index, unsigned exp = 1);
  static MultiPoly var(RingPtr ring, std::string_view name, unsigned exp = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  // Total degree; -1 is the degree sentinel of the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  void add_term(const Exponents& exps, const Rational& coeff);
  Rational coeff(const Exponents& exps) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator*(const Rational& c) const;
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Exact substitution of a polynomial (same ring) for one variable.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly substitute(std::size_t var, const Rational& value) const;

  // Coefficient of var^k, as a polynomial in the remaining variables
  // (still expressed over the same ring).
  MultiPoly coeff_in(std::size_t var, unsigned k) const;

  MultiPoly derivative(std::size_t var) const;

  // Full evaluation; point must cover every ring variable.
  Rational eval(const std::vector<Rational>& point) const;

  // Exact division: returns the quotient iff divisor divides exactly.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // Transport to another ring by variable name. Fails if a variable with a
  // nonzero exponent has no slot in the target ring.
  MultiPoly in_ring(const RingPtr& target) const;

  // Canonical text form, graded-lex descending: "3/2*X0^2*X1 - X3".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  void check_compatible(const MultiPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

// c such that p == c*q (q nonzero), if the two are proportional.
std::optional<Rational> proportional_ratio(const MultiPoly& p, const MultiPoly& q);

}  // namespace hesskum
