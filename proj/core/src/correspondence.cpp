#include "hesskum/correspondence.hpp"

#include <stdexcept>

#include "hesskum/invariant.hpp"
#include "hesskum/rational_linalg.hpp"

namespace hesskum {

Rational variant_d_value(Variant v) { return v == Variant::S5 ? Rational(-1) : Rational(1); }

BranchTriple::BranchTriple(Rational a_, Rational b_, Rational e_, Variant v)
    : a(std::move(a_)), b(std::move(b_)), e(std::move(e_)), variant(v) {
  const Rational d = variant_d_value(v);
  const Rational zero(0);
  if (a == b || a == e || b == e || a == zero || b == zero || e == zero || a == d || b == d ||
      e == d)
    throw std::invalid_argument("degenerate curve: branch points must be six distinct points");
}

PentahedralData branch_to_mu(const BranchTriple& t) {
  const Rational &a = t.a, &b = t.b, &e = t.e;
  std::array<Rational, 5> mu;
  if (t.variant == Variant::S5) {
    mu = {a * (b + Rational(1)), e * (a + Rational(1)), b * (a - e), e - b,
          (a - b) * (e + Rational(1))};
  } else {
    mu = {a * (Rational(1) - b), e * (Rational(1) - a), b * (e - a), e - b,
          (a - b) * (Rational(1) - e)};
  }
  for (int i = 0; i < 5; ++i)
    if (mu[i].is_zero())
      throw std::domain_error("degenerate pentahedron (mu" + std::to_string(i) + " = 0)");
  return PentahedralData(mu);
}

BranchTriple mu_to_branch(const PentahedralData& mu, Variant v) {
  if (!is_kummer_hessian(mu)) throw std::domain_error("not on Kummer locus");
  const Rational &m0 = mu.mu[0], &m1 = mu.mu[1], &m2 = mu.mu[2], &m3 = mu.mu[3], &m4 = mu.mu[4];
  Rational a, b, e;
  if (v == Variant::S5) {
    Rational db = m0 + m4 - m1 - m2 - m3;
    Rational de = m1 + m2 - m0 - m3 - m4;
    if (m3.is_zero() || db.is_zero() || de.is_zero())
      throw std::domain_error("mu_to_branch: zero denominator");
    a = (m1 + m4 - m0 - m2 - m3) / (Rational(2) * m3);
    b = Rational(2) * m2 / db;
    e = (m0 + m3 - m1 - m2 - m4) / de;
  } else {
    Rational db = m1 + m2 + m3 - m0 - m4;
    Rational de = m0 + m3 + m4 - m1 - m2;
    if (m3.is_zero() || db.is_zero() || de.is_zero())
      throw std::domain_error("mu_to_branch: zero denominator");
    a = (m0 + m3 + m4 - m1 - m2) / (Rational(2) * m3);
    b = Rational(2) * m2 / db;
    e = (m0 + m3 - m4 - m1 - m2) / de;
  }
  return BranchTriple(a, b, e, v);
}

ProjectivePoint5::ProjectivePoint5(std::array<Rational, 5> coords) : x(std::move(coords)) {
  Rational sum(0);
  bool all_zero = true;
  for (const auto& c : x) {
    sum += c;
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero) throw std::invalid_argument("ProjectivePoint5: zero vector");
  if (!sum.is_zero())
    throw std::invalid_argument("ProjectivePoint5: coordinates must sum to zero");
}

Rational beta_of(const PentahedralData& mu) {
  Rational den = mu.mu[0] + mu.mu[3] + mu.mu[4] - mu.mu[1] - mu.mu[2];
  if (den.is_zero()) throw std::domain_error("beta undefined");
  return Rational(2) * mu.mu[3] * mu.mu[4] / den;
}

MultiPoly r_quadric_form(const PentahedralData& mu) {
  const Rational al = alpha_of(mu);
  const Rational be = beta_of(mu);
  const RingPtr& r5 = x5_ring();
  auto X = [&](int i) { return MultiPoly::var(r5, static_cast<std::size_t>(i)); };
  const auto& m = mu.mu;
  MultiPoly R = (X(2) * m[1] + X(1) * m[2]) * (X(4) * m[3] + X(3) * m[4]) +
                (X(3) * X(4) * m[0] + X(0) * X(4) * m[3] + X(0) * X(3) * m[4]) * al +
                (X(1) * X(2) * m[0] + X(0) * X(2) * m[1] + X(0) * X(1) * m[2]) * be +
                X(0) * X(0) * (al * be);
  MultiPoly minus_sum(r5);
  for (int i = 0; i < 4; ++i) minus_sum -= X(i);
  return R.substitute(4u, minus_sum).in_ring(x_ring());
}

QMatrix r_quadric_matrix(const PentahedralData& mu) {
  MultiPoly q = r_quadric_form(mu);
  QMatrix m(4, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    MultiPoly di = q.derivative(i);
    for (std::size_t j = 0; j < 4; ++j)
      m[i][j] = di.derivative(j).constant_value() / Rational(2);
  }
  return m;
}

PolyMatrix r_quadric_matrix_symbolic() {
  const RingPtr& ring = xmu_ring();
  auto X = [&](int i) { return MultiPoly::var(ring, "X" + std::to_string(i)); };
  auto M = [&](int i) { return MultiPoly::var(ring, "mu" + std::to_string(i)); };
  // X4 eliminated up front; denominators of alpha and beta cleared:
  // R_cl = da*db*base + 2 mu1 mu2 db * (alpha block) + 2 mu3 mu4 da * (beta
  // block) + 4 mu1 mu2 mu3 mu4 X0^2.
  MultiPoly X4 = -X(0) - X(1) - X(2) - X(3);
  MultiPoly da = M(0) + M(1) + M(2) - M(3) - M(4);
  MultiPoly db = M(0) + M(3) + M(4) - M(1) - M(2);
  MultiPoly base = (X(2) * M(1) + X(1) * M(2)) * (X4 * M(3) + X(3) * M(4));
  MultiPoly ablock = X(3) * X4 * M(0) + X(0) * X4 * M(3) + X(0) * X(3) * M(4);
  MultiPoly bblock = X(1) * X(2) * M(0) + X(0) * X(2) * M(1) + X(0) * X(1) * M(2);
  MultiPoly Rcl = base * da * db + ablock * db * (M(1) * M(2) * Rational(2)) +
                  bblock * da * (M(3) * M(4) * Rational(2)) +
                  X(0) * X(0) * (M(1) * M(2) * M(3) * M(4) * Rational(4));
  PolyMatrix out(4, 4, ring);
  for (std::size_t i = 0; i < 4; ++i) {
    MultiPoly di = Rcl.derivative(ring->require("X" + std::to_string(i)));
    for (std::size_t j = 0; j < 4; ++j)
      out.at(i, j) =
          di.derivative(ring->require("X" + std::to_string(j))) * Rational(1, 2);
  }
  return out;
}

std::array<MultiPoly, 4> r_singular_point_symbolic() {
  const RingPtr& ring = xmu_ring();
  auto M = [&](int i) { return MultiPoly::var(ring, "mu" + std::to_string(i)); };
  return {M(1) + M(2) - M(3) - M(4), -M(1), -M(2), M(3)};
}

int r_rank_dichotomy(const PentahedralData& mu) {
  return static_cast<int>(qmat_rank(r_quadric_matrix(mu)));
}

namespace {

// Point table of the base plane P_(03214): coordinate k of point r is
// sum_j kBase[r][k][j] * mu_j.
constexpr int kBase[5][5][5] = {
    {{0, 1, 1, -1, -1}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
    {{-1, 0, 0, 0, 0}, {1, 0, -1, 1, -1}, {0, 0, 1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}},
    {{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 1, 0, 0}, {-1, 1, -1, 0, 1}, {0, 0, 0, 0, -1}},
    {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {-1, -1, 1, 1, 0}},
    {{-1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, -1, 0, -1, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}}};

constexpr int kBaseSeq[5] = {0, 3, 2, 1, 4};

// sigma sending the base sequence (0,3,2,1,4) to the canonical rotation of
// the requested order, and its inverse.
struct Relabelling {
  std::array<int, 5> sigma, inv;
};

Relabelling relabelling_for(const CyclicOrder& order) {
  Relabelling r{};
  const auto& tgt = order.seq();
  for (int t = 0; t < 5; ++t) r.sigma[kBaseSeq[t]] = tgt[t];
  for (int i = 0; i < 5; ++i) r.inv[r.sigma[i]] = i;
  return r;
}

}  // namespace

std::array<ProjectivePoint5, 5> plane_points(const PentahedralData& mu, const CyclicOrder& order) {
  auto rel = relabelling_for(order);
  auto point = [&](int r) {
    std::array<Rational, 5> coords;
    for (int m = 0; m < 5; ++m) {
      Rational acc(0);
      for (int j = 0; j < 5; ++j) {
        int c = kBase[r][rel.inv[m]][rel.inv[j]];
        if (c != 0) acc += mu.mu[j] * Rational(c);
      }
      coords[m] = acc;
    }
    return ProjectivePoint5(coords);
  };
  return {point(0), point(1), point(2), point(3), point(4)};
}

PolyMatrix plane_points_symbolic(const CyclicOrder& order) {
  auto rel = relabelling_for(order);
  PolyMatrix out(5, 5, mu_ring());
  for (int r = 0; r < 5; ++r)
    for (int m = 0; m < 5; ++m) {
      MultiPoly acc(mu_ring());
      for (int j = 0; j < 5; ++j) {
        int c = kBase[r][rel.inv[m]][rel.inv[j]];
        if (c != 0)
          acc += MultiPoly::var(mu_ring(), "mu" + std::to_string(j)) * Rational(c);
      }
      out.at(r, m) = acc;
    }
  return out;
}

namespace {

// Signed 3x3 minors of the first rank-3 row triple: the Laplace expansion
// cofactors of the 3x4 chart block, orthogonal to every row.
template <typename Entry, typename DetFn>
std::array<Entry, 4> plane_from_rows(DetFn det3, const Entry& zero) {
  std::array<Entry, 4> coeffs{zero, zero, zero, zero};
  for (int r0 = 0; r0 < 5; ++r0)
    for (int r1 = r0 + 1; r1 < 5; ++r1)
      for (int r2 = r1 + 1; r2 < 5; ++r2) {
        bool nonzero = false;
        std::array<Entry, 4> c{zero, zero, zero, zero};
        int sign = 1;
        for (int skip = 0; skip < 4; ++skip) {
          c[skip] = det3(r0, r1, r2, skip);
          if (sign < 0) c[skip] = -c[skip];
          sign = -sign;
          if (!(c[skip] == zero)) nonzero = true;
        }
        if (nonzero) return c;
      }
  return coeffs;  // all-zero: rank < 3 everywhere
}

}  // namespace

std::array<Rational, 4> plane_equation(const std::array<ProjectivePoint5, 5>& pts) {
  QMatrix chart(5, std::vector<Rational>(4));
  for (int r = 0; r < 5; ++r) {
    auto c = pts[r].chart();
    for (int j = 0; j < 4; ++j) chart[r][j] = c[j];
  }
  if (qmat_rank(chart) != 3) throw std::domain_error("points not coplanar");
  auto det3 = [&](int r0, int r1, int r2, int skip) {
    QMatrix m;
    for (int r : {r0, r1, r2}) {
      std::vector<Rational> row;
      for (int j = 0; j < 4; ++j)
        if (j != skip) row.push_back(chart[r][j]);
      m.push_back(std::move(row));
    }
    return qmat_det(std::move(m));
  };
  auto coeffs = plane_from_rows<Rational>(det3, Rational(0));
  for (int r = 0; r < 5; ++r) {
    Rational v(0);
    for (int j = 0; j < 4; ++j) v += coeffs[j] * chart[r][j];
    if (!v.is_zero()) throw std::logic_error("plane_equation: minor form misses a point");
  }
  return coeffs;
}

std::array<MultiPoly, 4> plane_equation_symbolic(const CyclicOrder& order) {
  PolyMatrix pts = plane_points_symbolic(order);
  auto det3 = [&](int r0, int r1, int r2, int skip) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < 4; ++j)
      if (static_cast<int>(j) != skip) cols.push_back(j);
    return pts.submatrix({static_cast<std::size_t>(r0), static_cast<std::size_t>(r1),
                          static_cast<std::size_t>(r2)},
                         cols)
        .determinant();
  };
  return plane_from_rows<MultiPoly>(det3, MultiPoly::zero(mu_ring()));
}

TropeSixPoints trope_six_points(const PentahedralData& mu) {
  if (!is_kummer_hessian(mu)) throw std::domain_error("not on Kummer locus");
  auto conic_point = [&](const char* order) {
    auto c = plane_equation(plane_points(mu, CyclicOrder::parse(order)));
    if (c[2].is_zero() && c[3].is_zero())
      throw std::domain_error("trope_six_points: plane contains the line l01");
    return LinePoint{c[3], -c[2]};
  };
  TropeSixPoints out{
      LinePoint{Rational(0), Rational(1)},   // p012
      LinePoint{Rational(1), Rational(0)},   // p013
      LinePoint{Rational(1), Rational(-1)},  // p014
      conic_point("01432"),
      conic_point("01324"),
      conic_point("03421"),
  };
  // pairwise distinct (cross products)
  const LinePoint* all[6] = {&out.node_p012, &out.node_p013, &out.node_p014,
                             &out.conic_a,   &out.conic_b,   &out.conic_e};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if ((all[i]->u * all[j]->v - all[j]->u * all[i]->v).is_zero())
        throw std::domain_error("degenerate curve: six trope points not distinct");
  return out;
}

}  // namespace hesskum
