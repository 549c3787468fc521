#include <doctest.h>

#include <random>

#include "hesskum/correspondence.hpp"
#include "hesskum/invariant.hpp"

using namespace hesskum;

namespace {

MultiPoly MU(int i) { return MultiPoly::var(mu_ring(), "mu" + std::to_string(i)); }

Rational F_at(std::array<long, 5> v) {
  std::vector<Rational> pt;
  for (long x : v) pt.emplace_back(x);
  return derive_condition().F.eval(pt);
}

PentahedralData random_mu(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  std::array<Rational, 5> m;
  for (auto& mi : m) {
    long n = 0;
    while (n == 0) n = num(rng);
    mi = Rational(n, den(rng));
  }
  return PentahedralData(m);
}

}  // namespace

TEST_CASE("ground-truth F: shape and frozen values") {
  const MultiPoly& F = derive_condition().F;
  CHECK(F.is_homogeneous());
  CHECK(F.total_degree() == 3);
  CHECK(F.term_count() == 35);  // every cubic monomial in five variables
  CHECK(F_at({1, 1, 1, 1, 1}) == Rational(5));
  CHECK(F_at({8, 15, -9, 2, -6}) == Rational(0));
}

TEST_CASE("F agrees with the elementary-symmetric form e1^3 - 4 e1 e2 + 8 e3") {
  MultiPoly e1(mu_ring()), e2(mu_ring()), e3(mu_ring());
  for (int i = 0; i < 5; ++i) {
    e1 += MU(i);
    for (int j = i + 1; j < 5; ++j) {
      e2 += MU(i) * MU(j);
      for (int k = j + 1; k < 5; ++k) e3 += MU(i) * MU(j) * MU(k);
    }
  }
  CHECK(derive_condition().F == e1.pow(3) - e1 * e2 * Rational(4) + e3 * Rational(8));
}

TEST_CASE("cubic condition: homogeneity and S5 symmetry at samples") {
  std::mt19937 rng(53);
  for (int i = 0; i < 20; ++i) {
    PentahedralData d = random_mu(rng);
    Rational f = cubic_condition(d);

    std::array<Rational, 5> scaled;
    for (int k = 0; k < 5; ++k) scaled[k] = d.mu[k] * Rational(7);
    CHECK(cubic_condition(PentahedralData(scaled)) == f * Rational(343));

    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::array<Rational, 5> permuted;
    for (int k = 0; k < 5; ++k) permuted[perm[k]] = d.mu[k];
    CHECK(cubic_condition(PentahedralData(permuted)) == f);
  }
}

TEST_CASE("F vanishes on the image of branch_to_mu") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  int done = 0;
  while (done < 50) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), e(num(rng), den(rng));
    try {
      PentahedralData d = branch_to_mu(BranchTriple(a, b, e, Variant::S5));
      CHECK(cubic_condition(d).is_zero());
      ++done;
    } catch (const std::exception&) {
      // inadmissible triple, draw again
    }
  }
}

TEST_CASE("closed-form reconciliation picks the unordered reading with scalar 1") {
  auto rep = closed_form_condition_check();
  CHECK(rep.matching_reading == "unordered-triples");
  CHECK(rep.scalar == Rational(1));

  // The middle sum has 20 terms (ordered pairs), the triple sums 10 / 60.
  MultiPoly middle(mu_ring());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) middle += MU(i) * MU(i) * MU(j);
  CHECK(middle.term_count() == 20);
  CHECK(closed_form_reading_unordered().term_count() == 35);
  CHECK_FALSE(proportional_ratio(derive_condition().F, closed_form_reading_ordered()).has_value());
}

TEST_CASE("alpha formula") {
  PentahedralData ones({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(alpha_of(ones) == Rational(2));

  std::mt19937 rng(61);
  for (int i = 0; i < 20; ++i) {
    PentahedralData d = random_mu(rng);
    Rational den = d.mu[0] + d.mu[1] + d.mu[2] - d.mu[3] - d.mu[4];
    if (den.is_zero()) continue;
    Rational a = alpha_of(d);
    std::array<Rational, 5> sw12{d.mu[0], d.mu[2], d.mu[1], d.mu[3], d.mu[4]};
    std::array<Rational, 5> sw34{d.mu[0], d.mu[1], d.mu[2], d.mu[4], d.mu[3]};
    CHECK(alpha_of(PentahedralData(sw12)) == a);
    CHECK(alpha_of(PentahedralData(sw34)) == a);
  }

  PentahedralData degenerate({Rational(1), Rational(1), Rational(1), Rational(1), Rational(2)});
  CHECK_THROWS_WITH_AS(alpha_of(degenerate), "alpha undefined", std::domain_error);
}

TEST_CASE("T quadratic coefficients") {
  std::mt19937 rng(67);
  auto sring = make_ring({"s"});
  for (int i = 0; i < 10; ++i) {
    PentahedralData d = random_mu(rng);
    TQuadratic t = t_quadratic(d);
    CHECK(t.lead == MultiPoly::constant(sring, Rational(4) * d.mu[0]));
    // T(0, alpha) has alpha as a factor: the constant term 4 s mu1 mu2
    // vanishes at s = 0.
    CHECK(t.constant.eval({Rational(0)}).is_zero());
    CHECK(t.constant.eval({Rational(1)}) == Rational(4) * d.mu[1] * d.mu[2]);
    // Independent rebuild of the middle coefficient at a random s.
    Rational s(i + 2);
    Rational expected = (s - d.mu[0]) * (s - d.mu[0]) +
                        (d.mu[2] - d.mu[1]) * (d.mu[2] - d.mu[1]) -
                        Rational(2) * (s + d.mu[0]) * (d.mu[2] + d.mu[1]);
    CHECK(t.middle.eval({s}) == expected);
  }

  // At s = mu0 with mu1 = mu2 = m, the middle coefficient
  // collapses to -2(2 mu0)(2m) = -8 mu0 m.
  PentahedralData d({Rational(3), Rational(5), Rational(5), Rational(7), Rational(11)});
  TQuadratic t = t_quadratic(d);
  CHECK(t.middle.eval({Rational(3)}) == Rational(-8) * Rational(3) * Rational(5));
}

TEST_CASE("difference of the two T's is linear in alpha with root alpha_of") {
  const RingPtr& r = st_ring();
  MultiPoly diff = t_quadratic_symbolic("s") - t_quadratic_symbolic("sb");
  MultiPoly s = MultiPoly::var(r, "s"), sb = MultiPoly::var(r, "sb");
  auto q = diff.divide_exact(s - sb);
  REQUIRE(q.has_value());
  CHECK(q->degree_in(r->require("alpha")) == 1);
  // (s + sb - 2(mu0+mu1+mu2)) alpha + 4 mu1 mu2: after s+sb = 2(mu3+mu4)
  // the root is 2 mu1 mu2 / (mu0+mu1+mu2-mu3-mu4); equivalently
  // A * 2 mu1 mu2 + B * d_alpha = 0 for the written A, B.
  MultiPoly A = q->coeff_in(r->require("alpha"), 1);
  MultiPoly B = q->coeff_in(r->require("alpha"), 0);
  auto M = [&](int i) { return MultiPoly::var(r, "mu" + std::to_string(i)); };
  MultiPoly da = M(0) + M(1) + M(2) - M(3) - M(4);
  MultiPoly identity = A * (M(1) * M(2) * Rational(2)) + B * da;
  // A still contains s + sb; rewrite through the defining quadratic.
  identity = rewrite_symmetric_in_s(identity);
  identity = identity.substitute(r->require("e1"), (M(3) + M(4)) * Rational(2));
  CHECK(identity.is_zero());
}

TEST_CASE("plugging alpha_of into both T's recovers F squared") {
  // T(s, a*) T(sb, a*) d_alpha^4, symmetrized, equals 4 mu1^2 mu2^2 F^2.
  const RingPtr& r = st_ring();
  auto M = [&](int i) { return MultiPoly::var(r, "mu" + std::to_string(i)); };
  MultiPoly da = M(0) + M(1) + M(2) - M(3) - M(4);
  auto t_at_alpha_star = [&](const char* sname) {
    // T(s, 2 mu1 mu2 / da) * da^2 as a polynomial.
    MultiPoly t = t_quadratic_symbolic(sname);
    const std::size_t ia = r->require("alpha");
    MultiPoly num = M(1) * M(2) * Rational(2);
    return t.coeff_in(ia, 2) * num * num + t.coeff_in(ia, 1) * num * da +
           t.coeff_in(ia, 0) * da * da;
  };
  MultiPoly prod = t_at_alpha_star("s") * t_at_alpha_star("sb");
  prod = rewrite_symmetric_in_s(std::move(prod));
  prod = prod.substitute(r->require("e1"), (M(3) + M(4)) * Rational(2));
  prod = prod.substitute(r->require("e2"), (M(3) - M(4)) * (M(3) - M(4)));
  MultiPoly F = derive_condition().F.in_ring(r);
  CHECK(prod == F * F * M(1) * M(1) * M(2) * M(2) * Rational(4));
}

TEST_CASE("rewrite_symmetric_in_s rejects asymmetric input") {
  const RingPtr& r = st_ring();
  MultiPoly s = MultiPoly::var(r, "s"), sb = MultiPoly::var(r, "sb");
  CHECK_THROWS_AS(rewrite_symmetric_in_s(s - sb), std::logic_error);
  CHECK(rewrite_symmetric_in_s(s + sb) == MultiPoly::var(r, "e1"));
  CHECK(rewrite_symmetric_in_s(s * sb) == MultiPoly::var(r, "e2"));
  CHECK(rewrite_symmetric_in_s(s * s + sb * sb) ==
        MultiPoly::var(r, "e1").pow(2) - MultiPoly::var(r, "e2") * Rational(2));
}

TEST_CASE("is_kummer_hessian") {
  CHECK(is_kummer_hessian(branch_to_mu(BranchTriple(Rational(2), Rational(3), Rational(5)))));
  PentahedralData ones({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK_FALSE(is_kummer_hessian(ones));  // F(1,1,1,1,1) = 5

  std::mt19937 rng(71);
  for (int i = 0; i < 10; ++i) {
    PentahedralData d = random_mu(rng);
    std::array<Rational, 5> scaled;
    for (int k = 0; k < 5; ++k) scaled[k] = d.mu[k] * Rational(-3, 2);
    CHECK(is_kummer_hessian(d) == is_kummer_hessian(PentahedralData(scaled)));
  }
}

TEST_CASE("no rational linear factor of F") {
  CHECK(cubic_condition_has_no_rational_linear_factor());
  // e1 does not divide F.
  MultiPoly e1(mu_ring());
  for (int i = 0; i < 5; ++i) e1 += MU(i);
  CHECK_FALSE(derive_condition().F.divide_exact(e1).has_value());
}
