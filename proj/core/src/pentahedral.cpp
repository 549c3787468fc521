#include "hesskum/pentahedral.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "hesskum/rational_linalg.hpp"

namespace hesskum {

PentahedralData::PentahedralData(std::array<Rational, 5> m) : mu(std::move(m)) {
  for (int i = 0; i < 5; ++i)
    if (mu[i].is_zero())
      throw std::invalid_argument("PentahedralData: mu" + std::to_string(i) + " is zero");
}

PentahedralData PentahedralData::parse_csv(std::string_view csv) {
  std::array<Rational, 5> m;
  std::size_t pos = 0;
  for (int i = 0; i < 5; ++i) {
    std::size_t comma = csv.find(',', pos);
    bool last = (i == 4);
    if (last != (comma == std::string_view::npos))
      throw std::invalid_argument("PentahedralData: expected five comma-separated rationals");
    m[i] = Rational::parse(csv.substr(pos, last ? std::string_view::npos : comma - pos));
    pos = comma + 1;
  }
  return PentahedralData(m);
}

std::string PentahedralData::csv() const {
  std::ostringstream os;
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << mu[i].str();
  return os.str();
}

const RingPtr& x_ring() {
  static const RingPtr r = make_ring({"X0", "X1", "X2", "X3"});
  return r;
}
const RingPtr& x5_ring() {
  static const RingPtr r = make_ring({"X0", "X1", "X2", "X3", "X4"});
  return r;
}
const RingPtr& mu_ring() {
  static const RingPtr r = make_ring({"mu0", "mu1", "mu2", "mu3", "mu4"});
  return r;
}
const RingPtr& xmu_ring() {
  static const RingPtr r = make_ring({"X0", "X1", "X2", "X3", "mu0", "mu1", "mu2", "mu3", "mu4"});
  return r;
}
const RingPtr& uv_ring() {
  static const RingPtr r = make_ring({"u", "v"});
  return r;
}
const RingPtr& uvmu_ring() {
  static const RingPtr r = make_ring({"u", "v", "mu0", "mu1", "mu2", "mu3", "mu4"});
  return r;
}

namespace {

// -(X0+X1+X2+X3) in the given ring.
MultiPoly minus_sum_x(const RingPtr& ring) {
  MultiPoly s(ring);
  for (int i = 0; i < 4; ++i) s -= MultiPoly::var(ring, "X" + std::to_string(i));
  return s;
}

}  // namespace

MultiPoly pentahedral_cubic(const PentahedralData& d) {
  const RingPtr& r5 = x5_ring();
  MultiPoly c(r5);
  for (int i = 0; i < 5; ++i)
    c += MultiPoly::var(r5, i, 3) * d.mu[i].inverse();
  c = c.substitute(4u, minus_sum_x(r5));
  return c.in_ring(x_ring());
}

MultiPoly hessian_closed_form(const PentahedralData& d) {
  const MultiPoly& sym = hessian_closed_form_symbolic();
  MultiPoly h = sym;
  for (int i = 0; i < 5; ++i)
    h = h.substitute(xmu_ring()->require("mu" + std::to_string(i)), d.mu[i]);
  return h.in_ring(x_ring());
}

const MultiPoly& hessian_closed_form_symbolic() {
  static const MultiPoly h = [] {
    const RingPtr& ring = xmu_ring();
    auto x5m = make_ring({"X0", "X1", "X2", "X3", "X4", "mu0", "mu1", "mu2", "mu3", "mu4"});
    MultiPoly H5(x5m);
    for (int i = 0; i < 5; ++i) {
      MultiPoly t = MultiPoly::var(x5m, "mu" + std::to_string(i));
      for (int j = 0; j < 5; ++j)
        if (j != i) t *= MultiPoly::var(x5m, "X" + std::to_string(j));
      H5 += t;
    }
    H5 = H5.substitute(x5m->require("X4"), minus_sum_x(x5m));
    return H5.in_ring(ring);
  }();
  return h;
}

PolyMatrix hessian_matrix(const PentahedralData& d) {
  MultiPoly c = pentahedral_cubic(d);
  PolyMatrix m(4, 4, x_ring());
  for (std::size_t i = 0; i < 4; ++i) {
    MultiPoly di = c.derivative(i);
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = di.derivative(j);
  }
  return m;
}

Rational verify_hessian_identity(const PentahedralData& d) {
  MultiPoly det = hessian_matrix(d).determinant();
  MultiPoly h = hessian_closed_form(d);
  auto c = proportional_ratio(det, h);
  if (!c || c->is_zero())
    throw std::logic_error("verify_hessian_identity: Hessian determinant not proportional to the closed form");
  return *c;
}

std::vector<LineLabel> all_lines() {
  std::vector<LineLabel> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<NodeLabel> all_nodes() {
  std::vector<NodeLabel> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) out.emplace_back(i, j, k);
  return out;
}

std::array<Rational, 4> node_chart_point(const NodeLabel& n) {
  std::array<Rational, 4> p{Rational(0), Rational(0), Rational(0), Rational(0)};
  if (!n.contains(4)) {
    for (int l = 0; l < 4; ++l)
      if (!n.contains(l)) p[l] = Rational(1);
  } else {
    // X_i = X_j = 0 for the two small indices, X4 = 0 forces X_k = -X_l.
    std::vector<int> free;
    for (int l = 0; l < 4; ++l)
      if (!n.contains(l)) free.push_back(l);
    p[free[0]] = Rational(1);
    p[free[1]] = Rational(-1);
  }
  return p;
}

std::array<MultiPoly, 4> line_chart_param(const LineLabel& l, const RingPtr& ring) {
  MultiPoly u = MultiPoly::var(ring, "u");
  MultiPoly v = MultiPoly::var(ring, "v");
  std::array<MultiPoly, 4> c{MultiPoly::zero(ring), MultiPoly::zero(ring),
                             MultiPoly::zero(ring), MultiPoly::zero(ring)};
  if (l.idx[1] <= 3) {
    std::vector<int> free;
    for (int k = 0; k < 4; ++k)
      if (!l.contains(k)) free.push_back(k);
    c[free[0]] = u;
    c[free[1]] = v;
  } else {
    // l_{i4}: X_i = 0 and X0+X1+X2+X3 = 0.
    std::vector<int> free;
    for (int k = 0; k < 4; ++k)
      if (k != l.idx[0]) free.push_back(k);
    c[free[0]] = u;
    c[free[1]] = v;
    c[free[2]] = -u - v;
  }
  return c;
}

const std::vector<Exponents>& quartic_monomials() {
  static const std::vector<Exponents> mons = [] {
    std::vector<Exponents> out;
    for (unsigned a = 0; a <= 4; ++a)
      for (unsigned b = 0; a + b <= 4; ++b)
        for (unsigned c = 0; a + b + c <= 4; ++c)
          out.push_back({a, b, c, 4 - a - b - c});
    std::sort(out.begin(), out.end(), [](const Exponents& x, const Exponents& y) {
      return GradedLexLess{}(x, y);
    });
    return out;
  }();
  return mons;
}

std::vector<Rational> quartic_coordinates(const MultiPoly& q) {
  const auto& mons = quartic_monomials();
  std::vector<Rational> v;
  v.reserve(mons.size());
  std::size_t seen = 0;
  for (const auto& e : mons) {
    Rational c = q.coeff(e);
    if (!c.is_zero()) ++seen;
    v.push_back(c);
  }
  if (seen != q.term_count())
    throw std::invalid_argument("quartic_coordinates: polynomial is not a quartic form in X0..X3");
  return v;
}

int vanishing_quartics_dimension() { return vanishing_quartics_dimension(all_lines()); }

int vanishing_quartics_dimension(const std::vector<LineLabel>& lines) {
  const auto& mons = quartic_monomials();
  const RingPtr& pr = uv_ring();
  QMatrix cond;
  for (const auto& line : lines) {
    auto par = line_chart_param(line, pr);
    // Restrict each monomial to the line: a binary quartic in (u, v); its
    // five coefficients are five linear conditions on the 35 monomials.
    std::vector<std::array<Rational, 5>> restricted;
    restricted.reserve(mons.size());
    for (const auto& e : mons) {
      MultiPoly m = MultiPoly::constant(pr, Rational(1));
      for (int i = 0; i < 4; ++i)
        if (e[i] > 0) m *= par[i].pow(e[i]);
      std::array<Rational, 5> coeffs;
      for (unsigned k = 0; k <= 4; ++k) coeffs[k] = m.coeff({k, 4 - k});
      restricted.push_back(coeffs);
    }
    for (unsigned k = 0; k <= 4; ++k) {
      std::vector<Rational> row;
      row.reserve(mons.size());
      for (const auto& rc : restricted) row.push_back(rc[k]);
      cond.push_back(std::move(row));
    }
  }
  return static_cast<int>(mons.size() - qmat_rank(std::move(cond)));
}

BranchSextic branch_sextic_factorization(const PentahedralData& d) {
  const RingPtr& xr = x_ring();
  MultiPoly h = hessian_closed_form(d);
  if (h.degree_in(3) != 2)
    throw std::logic_error("branch_sextic_factorization: H does not have degree 2 in X3");
  MultiPoly A = h.coeff_in(3, 2), B = h.coeff_in(3, 1), C = h.coeff_in(3, 0);
  MultiPoly disc = B * B - A * C * Rational(4);

  // E_s * E_sbar expanded in s and rewritten via s+sbar = 2(mu3+mu4),
  // s*sbar = (mu3-mu4)^2: e2 m^2 - e1 m q sigma + q^2 sigma^2, where
  // m = X0X1X2, q = mu0 X1X2 + mu1 X0X2 + mu2 X0X1, sigma = X0+X1+X2.
  MultiPoly X0 = MultiPoly::var(xr, 0u), X1 = MultiPoly::var(xr, 1u), X2 = MultiPoly::var(xr, 2u);
  MultiPoly m = X0 * X1 * X2;
  MultiPoly q = X1 * X2 * d.mu[0] + X0 * X2 * d.mu[1] + X0 * X1 * d.mu[2];
  MultiPoly sigma = X0 + X1 + X2;
  Rational e1 = (d.mu[3] + d.mu[4]) * Rational(2);
  Rational e2 = (d.mu[3] - d.mu[4]) * (d.mu[3] - d.mu[4]);
  MultiPoly product = m * m * e2 - m * q * sigma * e1 + q * q * sigma * sigma;

  auto ratio = proportional_ratio(disc, product);
  if (!ratio)
    throw std::logic_error("branch_sextic_factorization: discriminant not proportional to E_s*E_sbar");
  return BranchSextic{std::move(product), *ratio};
}

std::pair<MultiPoly, MultiPoly> tangent_plane_section(const PentahedralData& d, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 4 || j > 4)
    throw std::invalid_argument("tangent_plane_section: need two distinct indices in 0..4");
  std::vector<int> comp;
  for (int k = 0; k < 5; ++k)
    if (k != i && k != j) comp.push_back(k);
  const int p = comp[0], q = comp[1], r = comp[2];

  const RingPtr& r5 = x5_ring();
  MultiPoly H5(r5);
  for (int k = 0; k < 5; ++k) {
    MultiPoly t = MultiPoly::constant(r5, d.mu[k]);
    for (int l = 0; l < 5; ++l)
      if (l != k) t *= MultiPoly::var(r5, static_cast<std::size_t>(l));
    H5 += t;
  }
  MultiPoly xi = MultiPoly::var(r5, static_cast<std::size_t>(i));
  // On the plane mu_j X_i + mu_i X_j = 0: X_j = -(mu_j/mu_i) X_i, and the
  // hyperplane then forces X_r = -X_p - X_q - ((mu_i-mu_j)/mu_i) X_i.
  MultiPoly xj_val = xi * (-(d.mu[j] / d.mu[i]));
  MultiPoly xr_val = -MultiPoly::var(r5, static_cast<std::size_t>(p)) -
                     MultiPoly::var(r5, static_cast<std::size_t>(q)) -
                     xi * ((d.mu[i] - d.mu[j]) / d.mu[i]);
  MultiPoly restricted = H5.substitute(static_cast<std::size_t>(j), xj_val)
                             .substitute(static_cast<std::size_t>(r), xr_val);

  auto plane_ring = make_ring({"X" + std::to_string(p), "X" + std::to_string(q),
                               "X" + std::to_string(i)});
  restricted = restricted.in_ring(plane_ring);
  MultiPoly L = MultiPoly::var(plane_ring, 2u);
  auto once = restricted.divide_exact(L);
  auto twice = once ? once->divide_exact(L) : std::nullopt;
  if (!twice)
    throw std::logic_error("tangent_plane_section: restriction is not divisible by the line form squared");
  return {std::move(L), std::move(*twice)};
}

bool nodal_smoothness_heuristic(const PentahedralData& d, unsigned seed) {
  MultiPoly h = hessian_closed_form(d);
  std::array<MultiPoly, 4> grad{h.derivative(0), h.derivative(1), h.derivative(2),
                                h.derivative(3)};
  for (const auto& n : all_nodes()) {
    auto pt = node_chart_point(n);
    std::vector<Rational> v(pt.begin(), pt.end());
    for (const auto& g : grad)
      if (!g.eval(v).is_zero()) return false;
  }
  // Look for random points on H (rational points of a plane slice are rare;
  // sample gradient rank at random points of the ambient space instead: the
  // gradient must not vanish anywhere off the nodes we know).
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> v;
    for (int k = 0; k < 4; ++k) v.emplace_back(num(rng));
    bool all_zero = true;
    for (const auto& g : grad)
      if (!g.eval(v).is_zero()) {
        all_zero = false;
        break;
      }
    if (!all_zero) continue;
    if (h.eval(v).is_zero()) {
      bool is_known_node = false;
      for (const auto& n : all_nodes()) {
        auto pt = node_chart_point(n);
        // projective comparison
        QMatrix m{{pt[0], pt[1], pt[2], pt[3]}, {v[0], v[1], v[2], v[3]}};
        if (qmat_rank(m) <= 1) is_known_node = true;
      }
      bool origin = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
      if (!is_known_node && !origin) return false;
    }
  }
  return true;
}

}  // namespace hesskum
