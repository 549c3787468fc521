#include "hesskum/verify.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "hesskum/correspondence.hpp"
#include "hesskum/invariant.hpp"
#include "hesskum/kummer.hpp"
#include "hesskum/pentahedral.hpp"
#include "hesskum/rational_linalg.hpp"
#include "hesskum/resultant.hpp"

namespace hesskum {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
};

void put(CheckResult& r, std::string key, std::string value) {
  r.payload.emplace_back(std::move(key), std::move(value));
}

Rational random_small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  long n = 0;
  while (n == 0) n = num(rng);
  return Rational(n, den(rng));
}

PentahedralData random_mu(std::mt19937& rng) {
  std::array<Rational, 5> m;
  for (auto& mi : m) mi = random_small_rational(rng);
  return PentahedralData(m);
}

MultiPoly permute_mu_vars(const MultiPoly& f, const std::array<int, 5>& perm) {
  MultiPoly out(f.ring());
  for (const auto& [e, c] : f.terms()) {
    Exponents e2(5, 0);
    for (int i = 0; i < 5; ++i) e2[perm[i]] = e[i];
    out.add_term(e2, c);
  }
  return out;
}

// Grid of small-height branch values, none equal to 0, 1 or -1.
const std::vector<Rational>& branch_grid() {
  static const std::vector<Rational> g = {
      Rational(2),     Rational(3),     Rational(5),      Rational(-2),    Rational(-3),
      Rational(-5),    Rational(1, 2),  Rational(-1, 2),  Rational(3, 2),  Rational(-3, 2)};
  return g;
}

std::vector<BranchTriple> admissible_triples(Variant v) {
  std::vector<BranchTriple> out;
  const auto& g = branch_grid();
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& e : g) {
        if (a == b || a == e || b == e) continue;
        try {
          BranchTriple t(a, b, e, v);
          branch_to_mu(t);
          out.push_back(t);
        } catch (const std::exception&) {
          // skip degenerate pentahedra
        }
      }
  return out;
}

std::vector<std::vector<Rational>> minors3(const QMatrix& m) {
  std::vector<std::vector<Rational>> out;
  for (int skip_r = 0; skip_r < 4; ++skip_r) {
    std::vector<Rational> row;
    for (int skip_c = 0; skip_c < 4; ++skip_c) {
      QMatrix sub;
      for (int i = 0; i < 4; ++i) {
        if (i == skip_r) continue;
        std::vector<Rational> r;
        for (int j = 0; j < 4; ++j)
          if (j != skip_c) r.push_back(m[i][j]);
        sub.push_back(std::move(r));
      }
      row.push_back(qmat_det(std::move(sub)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

CheckResult check_weber_hexad_count() {
  CheckResult r;
  r.name = "weber-hexad-count";
  Timer t;
  auto hexads = enumerate_weber_hexads();
  r.pass = hexads.size() == 192;
  put(r, "count", std::to_string(hexads.size()));
  put(r, "candidates", "8008");
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_vanishing_quartics_dimension() {
  CheckResult r;
  r.name = "vanishing-quartics-dimension";
  Timer t;
  int dim = vanishing_quartics_dimension();
  r.pass = dim == 5;
  put(r, "dimension", std::to_string(dim));
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_hessian_identity_samples(unsigned seed) {
  CheckResult r;
  r.name = "hessian-identity-samples";
  Timer t;
  std::mt19937 rng(seed);
  int ok = 0;
  const int kSamples = 20;
  for (int i = 0; i < kSamples; ++i) {
    PentahedralData d = random_mu(rng);
    Rational c = verify_hessian_identity(d);
    Rational prod(1);
    for (const auto& m : d.mu) prod *= m;
    if (c * prod == Rational(1296)) ++ok;
  }
  r.pass = ok == kSamples;
  put(r, "samples", std::to_string(kSamples));
  put(r, "proportional", std::to_string(ok));
  put(r, "ratio_times_prod_mu", "1296");
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_resultant_identity() {
  CheckResult r;
  r.name = "resultant-identity";
  Timer t;
  const MultiPoly& F = derive_condition().F;  // throws unless 512*prod(mu) divides
  bool cubic = F.total_degree() == 3 && F.is_homogeneous();
  // S5 generated by the transposition (01) and the 5-cycle (01234).
  bool symmetric = permute_mu_vars(F, {1, 0, 2, 3, 4}) == F &&
                   permute_mu_vars(F, {1, 2, 3, 4, 0}) == F;
  // Reconstruct the product side exactly.
  const RingPtr& r10 = st_ring();
  MultiPoly res = resultant(t_quadratic_symbolic("s"), t_quadratic_symbolic("sb"), "alpha");
  MultiPoly sym = rewrite_symmetric_in_s(std::move(res));
  MultiPoly m3 = MultiPoly::var(r10, "mu3"), m4 = MultiPoly::var(r10, "mu4");
  sym = sym.substitute(r10->require("e1"), (m3 + m4) * Rational(2));
  sym = sym.substitute(r10->require("e2"), (m3 - m4) * (m3 - m4));
  MultiPoly rhs = F.in_ring(r10) * Rational(512);
  for (int i = 0; i < 5; ++i) rhs *= MultiPoly::var(r10, "mu" + std::to_string(i));
  bool identity = sym == rhs;
  r.pass = cubic && symmetric && identity;
  put(r, "homogeneous_cubic", cubic ? "true" : "false");
  put(r, "s5_symmetric", symmetric ? "true" : "false");
  put(r, "equals_512_prod_mu_F", identity ? "true" : "false");
  put(r, "F_terms", std::to_string(F.term_count()));
  std::vector<Rational> ones(5, Rational(1));
  put(r, "F_at_ones", F.eval(ones).str());
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_closed_form_reconciliation() {
  CheckResult r;
  r.name = "closed-form-reconciliation";
  Timer t;
  auto rep = closed_form_condition_check();
  r.pass = !rep.scalar.is_zero();
  put(r, "matching_reading", rep.matching_reading);
  put(r, "scalar", rep.scalar.str());
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_r_quadric_dichotomy(unsigned seed) {
  CheckResult r;
  r.name = "r-quadric-dichotomy";
  Timer t;
  PolyMatrix sym = r_quadric_matrix_symbolic();
  bool det_zero = sym.determinant().is_zero();
  auto kernel_vec = r_singular_point_symbolic();
  std::vector<MultiPoly> kv(kernel_vec.begin(), kernel_vec.end());
  bool kernel_ok = true;
  for (const auto& entry : sym.apply(kv))
    if (!entry.is_zero()) kernel_ok = false;

  std::mt19937 rng(seed);
  auto triples = admissible_triples(Variant::S5);
  std::shuffle(triples.begin(), triples.end(), rng);
  int kummer_ok = 0, kummer_tested = 0;
  for (const auto& tr : triples) {
    if (kummer_tested == 50) break;
    PentahedralData d = branch_to_mu(tr);
    QMatrix m;
    try {
      m = r_quadric_matrix(d);  // needs alpha, beta defined
    } catch (const std::domain_error&) {
      continue;
    }
    ++kummer_tested;
    bool all_zero = true;
    for (const auto& row : minors3(m))
      for (const auto& mval : row)
        if (!mval.is_zero()) all_zero = false;
    if (all_zero) ++kummer_ok;
  }
  int generic_ok = 0;
  for (int i = 0; i < 50; ++i) {
    PentahedralData d = random_mu(rng);
    if (cubic_condition(d).is_zero()) {
      --i;
      continue;
    }
    Rational da = d.mu[0] + d.mu[1] + d.mu[2] - d.mu[3] - d.mu[4];
    Rational db = d.mu[0] + d.mu[3] + d.mu[4] - d.mu[1] - d.mu[2];
    if (da.is_zero() || db.is_zero()) {
      --i;
      continue;
    }
    if (r_rank_dichotomy(d) == 3) ++generic_ok;
  }
  r.pass = det_zero && kernel_ok && kummer_ok == 50 && generic_ok == 50;
  put(r, "symbolic_det_zero", det_zero ? "true" : "false");
  put(r, "singular_point_in_kernel", kernel_ok ? "true" : "false");
  put(r, "kummer_rank_le_2", std::to_string(kummer_ok) + "/50");
  put(r, "generic_rank_3", std::to_string(generic_ok) + "/50");
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_correspondence_round_trip() {
  CheckResult r;
  r.name = "correspondence-round-trip";
  Timer t;
  auto triples5 = admissible_triples(Variant::S5);
  int s5_ok = 0, s5_f_zero = 0;
  for (const auto& tr : triples5) {
    PentahedralData d = branch_to_mu(tr);
    if (cubic_condition(d).is_zero()) ++s5_f_zero;
    BranchTriple back = mu_to_branch(d, Variant::S5);
    if (back.a == tr.a && back.b == tr.b && back.e == tr.e) ++s5_ok;
  }
  auto triples1 = admissible_triples(Variant::S1);
  int s1_ok = 0, s1_f_zero = 0, s1_b_e_ok = 0;
  std::string s1_example;
  for (const auto& tr : triples1) {
    PentahedralData d = branch_to_mu(tr);
    if (cubic_condition(d).is_zero()) ++s1_f_zero;
    try {
      BranchTriple back = mu_to_branch(d, Variant::S1);
      bool full = back.a == tr.a && back.b == tr.b && back.e == tr.e;
      if (full) ++s1_ok;
      if (back.b == tr.b && back.e == tr.e) ++s1_b_e_ok;
      if (!full && s1_example.empty())
        s1_example = "(a,b,e)=(" + tr.a.str() + "," + tr.b.str() + "," + tr.e.str() +
                     ") -> a'=" + back.a.str();
    } catch (const std::exception& ex) {
      if (s1_example.empty()) s1_example = std::string("error: ") + ex.what();
    }
  }
  const int n5 = static_cast<int>(triples5.size());
  const int n1 = static_cast<int>(triples1.size());
  r.pass = n5 >= 100 && s5_ok == n5 && s5_f_zero == n5 && s1_f_zero == n1;
  put(r, "s5_grid_points", std::to_string(n5));
  put(r, "s5_round_trip_exact", std::to_string(s5_ok) + "/" + std::to_string(n5));
  put(r, "s5_F_zero", std::to_string(s5_f_zero) + "/" + std::to_string(n5));
  put(r, "s1_F_zero", std::to_string(s1_f_zero) + "/" + std::to_string(n1));
  put(r, "s1_round_trip_exact", std::to_string(s1_ok) + "/" + std::to_string(n1));
  put(r, "s1_b_e_components_exact", std::to_string(s1_b_e_ok) + "/" + std::to_string(n1));
  if (!s1_example.empty()) put(r, "s1_first_failure", s1_example);
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_coplanarity_factorization(unsigned seed) {
  CheckResult r;
  r.name = "coplanarity-r-factorization";
  Timer t;
  std::mt19937 rng(seed);
  auto triples = admissible_triples(Variant::S5);
  std::shuffle(triples.begin(), triples.end(), rng);
  const CyclicOrder base = CyclicOrder::parse("03214");
  int ok = 0;
  const int kSamples = 20;
  for (int i = 0; i < kSamples && i < static_cast<int>(triples.size()); ++i) {
    PentahedralData d = branch_to_mu(triples[i]);
    auto pts = plane_points(d, base);
    QMatrix chart(5, std::vector<Rational>(4));
    for (int row = 0; row < 5; ++row) {
      auto c = pts[row].chart();
      for (int j = 0; j < 4; ++j) chart[row][j] = c[j];
    }
    if (qmat_rank(chart) != 3) continue;
    auto plane = plane_equation(pts);
    MultiPoly lin(x_ring());
    for (std::size_t j = 0; j < 4; ++j)
      lin += MultiPoly::var(x_ring(), j) * plane[j];
    auto quotient = r_quadric_form(d).divide_exact(lin);
    if (quotient && quotient->total_degree() == 1) ++ok;
  }
  r.pass = ok == kSamples;
  put(r, "samples", std::to_string(kSamples));
  put(r, "rank3_and_R_splits", std::to_string(ok));
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_branch_sextic(unsigned seed) {
  CheckResult r;
  r.name = "branch-sextic";
  Timer t;
  std::mt19937 rng(seed);
  int ok = 0;
  const int kSamples = 20;
  std::set<std::string> ratios;
  for (int i = 0; i < kSamples; ++i) {
    PentahedralData d = random_mu(rng);
    auto bs = branch_sextic_factorization(d);
    if (!bs.ratio.is_zero()) ++ok;
    ratios.insert(bs.ratio.str());
  }
  r.pass = ok == kSamples && ratios.size() == 1;
  put(r, "samples", std::to_string(kSamples));
  put(r, "nonzero_ratio", std::to_string(ok));
  put(r, "ratio", ratios.empty() ? "-" : *ratios.begin());
  r.elapsed_ms = t.ms();
  return r;
}

CheckResult check_combinatorial_battery() {
  CheckResult r;
  r.name = "combinatorial-battery";
  Timer t;
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      put(r, "failed", what);
    }
  };

  const auto& pts = all_two_torsion();
  const auto& ts = all_tropes();
  for (const auto& tr : ts) {
    int c = 0;
    for (const auto& p : pts) c += incidence(p, tr) ? 1 : 0;
    expect(c == 6, "trope point count");
  }
  for (const auto& p : pts) {
    int c = 0;
    for (const auto& tr : ts) c += incidence(p, tr) ? 1 : 0;
    expect(c == 6, "point trope count");
  }

  Hexad std_h = standard_hexad();
  expect(is_weber_hexad(std_h), "standard hexad");

  auto hexads = enumerate_weber_hexads();
  expect(hexads.size() == 192, "hexad count");
  std::set<Hexad> all(hexads.begin(), hexads.end());
  for (const auto& h : hexads)
    for (const auto& g : pts)
      if (!all.count(h.translated(g))) expect(false, "translation closure");
  // Orbit of the standard hexad under translations x S6, with stabilizer.
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  std::set<Hexad> orbit;
  long stab = 0;
  do {
    Hexad ph = std_h.relettered(perm);
    for (const auto& g : pts) {
      Hexad h = ph.translated(g);
      orbit.insert(h);
      if (h == std_h) ++stab;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  expect(orbit == all, "orbit equals all 192");
  expect(stab == 60 && 16 * 720 / stab == 192, "each one 60 times");

  // Only 0 lies on theta_a among the standard hexad's singleton tropes.
  TropeLabel theta_a = TropeLabel::from_string("a");
  for (const auto& tr : ts) {
    std::vector<TwoTorsionLabel> on;
    for (const auto& p : std_h.points())
      if (incidence(p, tr)) on.push_back(p);
    if (on.size() == 1) {
      bool is_zero_pt = on[0] == TwoTorsionLabel::zero();
      expect(is_zero_pt == (tr == theta_a), "only 0 on theta_a");
    }
  }

  // Conic labels: 6 + 6 residuals give 12 distinct oriented orders whose
  // unoriented classes exhaust all 12; A5 splits the classes 6 + 6.
  auto labels = conic_labels_standard();
  std::set<CyclicOrder> twelve, unor;
  for (const auto& [pt, c] : labels) {
    twelve.insert(c);
    twelve.insert(c.residual());
    unor.insert(c.unoriented_key());
    unor.insert(c.residual().unoriented_key());
  }
  expect(twelve.size() == 12, "labels+residuals distinct");
  expect(unor.size() == 12, "unoriented classes exhaust 12");
  std::set<CyclicOrder> all_unor;
  for (const auto& c : all_cyclic_orders()) all_unor.insert(c.unoriented_key());
  expect(all_unor == unor, "all 12 cyclic orders covered");

  // A5 orbits of the unoriented classes.
  std::vector<std::array<int, 5>> evens;
  std::array<int, 5> p5{0, 1, 2, 3, 4};
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (p5[i] > p5[j]) ++inversions;
    if (inversions % 2 == 0) evens.push_back(p5);
  } while (std::next_permutation(p5.begin(), p5.end()));
  auto a5_orbit = [&](const CyclicOrder& c) {
    std::set<CyclicOrder> o;
    for (const auto& g : evens) o.insert(c.relabelled(g).unoriented_key());
    return o;
  };
  auto orbit_labels = a5_orbit(labels[0].second);
  auto orbit_res = a5_orbit(labels[0].second.residual());
  expect(orbit_labels.size() == 6 && orbit_res.size() == 6, "A5 orbits of size 6");
  bool disjoint = true;
  for (const auto& c : orbit_labels)
    if (orbit_res.count(c)) disjoint = false;
  expect(disjoint, "A5 orbits disjoint");
  for (const auto& [pt, c] : labels) {
    expect(orbit_labels.count(c.unoriented_key()) == 1, "labels in one orbit");
    expect(orbit_res.count(c.residual().unoriented_key()) == 1, "residuals in other orbit");
  }

  // Node-incidence profiles: consecutive-letter rule, all (order, node).
  for (const auto& c : all_cyclic_orders()) {
    int met = 0, total = 0;
    for (const auto& l : all_lines()) met += c.meets_line(l) ? 1 : 0;
    expect(met == 5, "five met lines");
    for (const auto& n : all_nodes()) {
      int prof = c.node_profile(n);
      // independent consecutive-position computation
      std::array<int, 5> pos{};
      for (int k = 0; k < 5; ++k) pos[c.seq()[k]] = k;
      std::set<int> s{pos[n.idx[0]], pos[n.idx[1]], pos[n.idx[2]]};
      bool consec = false;
      for (int start = 0; start < 5; ++start)
        if (s.count(start) && s.count((start + 1) % 5) && s.count((start + 2) % 5))
          consec = true;
      expect(prof == (consec ? 2 : 1), "consecutive rule");
      total += prof;
    }
    expect(total == 15, "profile double count");
    expect(c.residual().residual() == c.reversed(), "residual squared is reverse");
    int overlap = 0;
    for (const auto& l : all_lines())
      if (c.meets_line(l) && c.residual().meets_line(l)) ++overlap;
    expect(overlap == 0, "residual meets complementary lines");
  }

  // Line incidences of C0 = (02413).
  CyclicOrder c0 = CyclicOrder::parse("02413");
  for (auto [i, j] : {std::pair{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})
    expect(c0.meets_line(LineLabel(i, j)), "C0 line list");
  expect(!c0.meets_line(LineLabel(0, 1)), "C0 misses l01");

  r.pass = ok;
  put(r, "hexads", std::to_string(hexads.size()));
  put(r, "cyclic_orders", "24 oriented / 12 unoriented");
  r.elapsed_ms = t.ms();
  return r;
}

std::vector<CheckResult> run_verification_battery(unsigned seed) {
  std::vector<CheckResult> out;
  auto guard = [&out](const char* name, auto&& fn) {
    Timer t;
    try {
      out.push_back(fn());
    } catch (const std::exception& ex) {
      CheckResult r;
      r.name = name;
      put(r, "error", ex.what());
      r.elapsed_ms = t.ms();
      out.push_back(std::move(r));
    }
  };
  guard("weber-hexad-count", [&] { return check_weber_hexad_count(); });
  guard("vanishing-quartics-dimension", [&] { return check_vanishing_quartics_dimension(); });
  guard("hessian-identity-samples", [&] { return check_hessian_identity_samples(seed); });
  guard("resultant-identity", [&] { return check_resultant_identity(); });
  guard("closed-form-reconciliation", [&] { return check_closed_form_reconciliation(); });
  guard("r-quadric-dichotomy", [&] { return check_r_quadric_dichotomy(seed + 1); });
  guard("correspondence-round-trip", [&] { return check_correspondence_round_trip(); });
  guard("coplanarity-r-factorization", [&] { return check_coplanarity_factorization(seed + 2); });
  guard("branch-sextic", [&] { return check_branch_sextic(seed + 3); });
  guard("combinatorial-battery", [&] { return check_combinatorial_battery(); });
  return out;
}

}  // namespace hesskum
