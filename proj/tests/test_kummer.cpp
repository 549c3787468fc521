#include <doctest.h>

#include <set>

#include "hesskum/kummer.hpp"

using namespace hesskum;

namespace {

TwoTorsionLabel TT(const char* s) { return TwoTorsionLabel::from_string(s); }

}  // namespace

TEST_CASE("two-torsion canonical form and group law") {
  CHECK((TT("ab") + TT("bc")) == TT("ac"));
  CHECK((TT("ab") + TT("cd")) == TT("ef"));  // complement of {a,b,c,d}
  for (const auto& p : all_two_torsion()) {
    CHECK((p + p) == TwoTorsionLabel::zero());
    CHECK((p + TwoTorsionLabel::zero()) == p);
    int pc = 0;
    for (int b = 0; b < 6; ++b) pc += (p.bits() >> b) & 1;
    CHECK((pc == 0 || pc == 2));
  }
  CHECK(all_two_torsion().size() == 16);

  // Exhaustive associativity on the 16-element group.
  for (const auto& p : all_two_torsion())
    for (const auto& q : all_two_torsion())
      for (const auto& r : all_two_torsion()) CHECK(((p + q) + r) == (p + (q + r)));

  CHECK_THROWS_AS(TwoTorsionLabel::from_bits(0b111), std::invalid_argument);
  CHECK_THROWS_AS(TwoTorsionLabel::from_string("aa"), std::invalid_argument);
  CHECK(TwoTorsionLabel::from_bits(0b111100) == TT("ab"));
}

TEST_CASE("divisor notation") {
  CHECK(TwoTorsionLabel::from_divisor("0") == TwoTorsionLabel::zero());
  CHECK(TwoTorsionLabel::from_divisor("b+c-2a") == TT("bc"));
  CHECK(TwoTorsionLabel::from_divisor("b-a") == TT("ab"));
  CHECK(TwoTorsionLabel::from_divisor("f-a") == TT("af"));
  CHECK_THROWS_AS(TwoTorsionLabel::from_divisor("b+b-2a"), std::invalid_argument);
  CHECK_THROWS_AS(TwoTorsionLabel::from_divisor("a+b-2a"), std::invalid_argument);
  CHECK_THROWS_AS(TwoTorsionLabel::from_divisor("g-a"), std::invalid_argument);
  CHECK_THROWS_AS(TwoTorsionLabel::from_divisor("b+c-2b"), std::invalid_argument);
}

TEST_CASE("trope canonical form") {
  CHECK(all_tropes().size() == 16);
  for (const auto& t : all_tropes()) {
    int pc = 0;
    for (int b = 0; b < 6; ++b) pc += (t.bits() >> b) & 1;
    CHECK((pc == 1 || pc == 3));
    if (pc == 3) CHECK(((t.bits() >> 5) & 1) == 0);  // 3-subsets avoid f
  }
  CHECK(TropeLabel::from_string("def") == TropeLabel::from_bits(0b111000 ^ 0b111111));
  CHECK_THROWS_AS(TropeLabel::from_string("ab"), std::invalid_argument);
}

TEST_CASE("incidence table") {
  CHECK(incidence(TwoTorsionLabel::zero(), TropeLabel::from_string("a")));
  for (const auto& t : all_tropes()) {
    int count = 0;
    for (const auto& p : all_two_torsion()) count += incidence(p, t) ? 1 : 0;
    CHECK(count == 6);
  }
  for (const auto& p : all_two_torsion()) {
    int count = 0;
    for (const auto& t : all_tropes()) count += incidence(p, t) ? 1 : 0;
    CHECK(count == 6);
  }
}

TEST_CASE("Weber hexad detection") {
  Hexad std_h = standard_hexad();
  CHECK(is_weber_hexad(std_h));

  // The six points of theta_a taken as a hexad: theta_a contains all six,
  // so the profile contains a 6 and the test fails.
  std::array<TwoTorsionLabel, 6> on_theta_a{
      TwoTorsionLabel::zero(), TT("ab"), TT("ac"), TT("ad"), TT("ae"), TT("af")};
  CHECK_FALSE(is_weber_hexad(Hexad(on_theta_a)));

  CHECK(is_weber_hexad(std_h.translated(TT("ab"))));

  CHECK_THROWS_AS(Hexad::parse("0,bc,cd,de,ef"), std::invalid_argument);
  CHECK_THROWS_AS(Hexad::parse("0,bc,cd,de,ef,bc"), std::invalid_argument);
}

TEST_CASE("enumerate and closure") {
  auto hexads = enumerate_weber_hexads();
  CHECK(hexads.size() == 192);
  std::set<Hexad> all(hexads.begin(), hexads.end());
  CHECK(all.size() == 192);
  CHECK(all.count(standard_hexad()) == 1);

  for (const auto& g : all_two_torsion()) CHECK(all.count(standard_hexad().translated(g)) == 1);
  // Letter 6-cycle and a transposition generate S6.
  CHECK(all.count(standard_hexad().relettered({1, 2, 3, 4, 5, 0})) == 1);
  CHECK(all.count(standard_hexad().relettered({1, 0, 2, 3, 4, 5})) == 1);
}

TEST_CASE("standard hexad singleton tropes") {
  // Six tropes meet the standard hexad in exactly one point; the point is 0
  // only for theta_a.
  Hexad h = standard_hexad();
  int singles = 0;
  for (const auto& t : all_tropes()) {
    std::vector<TwoTorsionLabel> on;
    for (const auto& p : h.points())
      if (incidence(p, t)) on.push_back(p);
    if (on.size() == 1) {
      ++singles;
      if (t == TropeLabel::from_string("a"))
        CHECK(on[0] == TwoTorsionLabel::zero());
      else
        CHECK(on[0] != TwoTorsionLabel::zero());
    }
  }
  CHECK(singles == 6);
}

TEST_CASE("cyclic order canonicalization and parsing") {
  CHECK(CyclicOrder::parse("24130") == CyclicOrder::parse("02413"));
  CHECK(CyclicOrder::parse("02413").str() == "02413");
  CHECK(all_cyclic_orders().size() == 24);
  CHECK_THROWS_AS(CyclicOrder::parse("01234x"), std::invalid_argument);
  CHECK_THROWS_AS(CyclicOrder::parse("01233"), std::invalid_argument);
}

TEST_CASE("standard conic labels") {
  auto labels = conic_labels_standard();
  REQUIRE(labels.size() == 6);
  CHECK(labels[0].first == TwoTorsionLabel::zero());
  CHECK(labels[0].second == CyclicOrder::parse("02413"));
  // the c+d-a row
  CHECK(labels[2].first == TwoTorsionLabel::from_divisor("c+d-2a"));
  CHECK(labels[2].second == CyclicOrder::parse("01432"));

  // The six assigned orders form a single A5-orbit of unoriented classes.
  std::array<int, 5> p{0, 1, 2, 3, 4};
  std::set<CyclicOrder> orbit;
  do {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (p[i] > p[j]) ++inv;
    if (inv % 2 == 0) orbit.insert(labels[0].second.relabelled(p).unoriented_key());
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(orbit.size() == 6);
  for (const auto& [pt, c] : labels) CHECK(orbit.count(c.unoriented_key()) == 1);
}

TEST_CASE("line adjacency") {
  CyclicOrder c0 = CyclicOrder::parse("02413");
  CHECK(c0.meets_line(LineLabel(0, 2)));
  CHECK(c0.meets_line(LineLabel(2, 4)));
  CHECK(c0.meets_line(LineLabel(4, 1)));
  CHECK(c0.meets_line(LineLabel(1, 3)));
  CHECK(c0.meets_line(LineLabel(3, 0)));
  CHECK_FALSE(c0.meets_line(LineLabel(0, 1)));

  for (const auto& c : all_cyclic_orders()) {
    int met = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) met += c.meets_line(LineLabel(i, j)) ? 1 : 0;
    CHECK(met == 5);
  }
}

TEST_CASE("node profiles follow the consecutive-letter rule") {
  CyclicOrder c0 = CyclicOrder::parse("02413");
  CHECK(c0.node_profile(NodeLabel(0, 2, 4)) == 2);
  CHECK(c0.node_profile(NodeLabel(0, 1, 2)) == 1);

  for (const auto& c : all_cyclic_orders()) {
    int total = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
          int prof = c.node_profile(NodeLabel(i, j, k));
          CHECK((prof == 1 || prof == 2));
          total += prof;
        }
    CHECK(total == 15);  // five met lines, each through three nodes
  }
}

TEST_CASE("residual orders") {
  CHECK(CyclicOrder::parse("01234").residual() == CyclicOrder::parse("02413"));
  for (const auto& c : all_cyclic_orders()) {
    CHECK(c.residual().residual() == c.reversed());
    // Complementary line sets of size 5 each.
    int shared = 0, covered = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        bool a = c.meets_line(LineLabel(i, j)), b = c.residual().meets_line(LineLabel(i, j));
        if (a && b) ++shared;
        if (a || b) ++covered;
      }
    CHECK(shared == 0);
    CHECK(covered == 10);
  }

  // Labels and residuals cover all 12 unoriented cyclic orders.
  std::set<CyclicOrder> unoriented, all_unoriented;
  for (const auto& [pt, c] : conic_labels_standard()) {
    unoriented.insert(c.unoriented_key());
    unoriented.insert(c.residual().unoriented_key());
  }
  for (const auto& c : all_cyclic_orders()) all_unoriented.insert(c.unoriented_key());
  CHECK(all_unoriented.size() == 12);
  CHECK(unoriented == all_unoriented);
}
