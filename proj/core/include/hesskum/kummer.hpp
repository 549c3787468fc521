#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hesskum/labels.hpp"

namespace hesskum {

// Two-torsion of J(B) for a genus 2 curve branched over six points labelled
// a..f: even subsets of {a..f} modulo complementation. The canonical
// representative is the one of cardinality 0 or 2 (each class has exactly
// one), matching the divisor labels 0, x-a, x+y-2a.
class TwoTorsionLabel {
 public:
  TwoTorsionLabel() : bits_(0) {}

  static TwoTorsionLabel zero() { return TwoTorsionLabel(); }
  // Any even subset as a bitmask over letters a..f = bits 0..5.
  static TwoTorsionLabel from_bits(std::uint8_t raw);
  // "0", or two distinct letters like "bc".
  static TwoTorsionLabel from_string(std::string_view text);
  // Divisor notation with base point a: "0", "x-a", or "x+y-2a".
  static TwoTorsionLabel from_divisor(std::string_view expr);

  std::uint8_t bits() const { return bits_; }
  std::string str() const;  // "0" or e.g. "bc"

  // Group law: symmetric difference, then canonicalization. Every element
  // is its own inverse.
  friend TwoTorsionLabel operator+(TwoTorsionLabel x, TwoTorsionLabel y) {
    return from_bits(static_cast<std::uint8_t>(x.bits_ ^ y.bits_));
  }

  friend auto operator<=>(const TwoTorsionLabel&, const TwoTorsionLabel&) = default;

 private:
  std::uint8_t bits_;  // canonical: even popcount <= 2
};

// Theta-divisor labels: odd subsets of {a..f} modulo complementation,
// canonical representative of cardinality 1, or the 3-subset without f.
class TropeLabel {
 public:
  static TropeLabel from_bits(std::uint8_t raw);
  static TropeLabel from_string(std::string_view text);  // e.g. "a" or "bcd"

  std::uint8_t bits() const { return bits_; }
  std::string str() const;

  friend auto operator<=>(const TropeLabel&, const TropeLabel&) = default;

 private:
  explicit TropeLabel(std::uint8_t b) : bits_(b) {}
  std::uint8_t bits_;
};

const std::vector<TwoTorsionLabel>& all_two_torsion();  // 16 canonical points
const std::vector<TropeLabel>& all_tropes();            // 16 canonical tropes

// True iff the two-torsion point lies on the trope: the symmetric difference
// of any representatives has cardinality 1 or 5 (well defined under
// complementation). Each trope carries 6 points and each point 6 tropes.
bool incidence(TwoTorsionLabel p, TropeLabel t);

// Six distinct two-torsion points.
class Hexad {
 public:
  explicit Hexad(std::array<TwoTorsionLabel, 6> pts);
  static Hexad parse(std::string_view csv);  // "0,bc,cd,de,ef,fb"

  const std::array<TwoTorsionLabel, 6>& points() const { return pts_; }
  bool contains(TwoTorsionLabel p) const;
  std::string str() const;

  Hexad translated(TwoTorsionLabel g) const;
  Hexad relettered(const std::array<int, 6>& perm) const;  // letter i -> perm[i]

  friend auto operator<=>(const Hexad&, const Hexad&) = default;

 private:
  std::array<TwoTorsionLabel, 6> pts_;  // sorted
};

// Incidence profile of a hexad against all 16 tropes, indexed as
// all_tropes(); entries count hexad points on each trope.
std::array<int, 16> trope_profile(const Hexad& h);

// A Weber hexad meets 10 tropes in 3 points and the other 6 in exactly 1.
bool is_weber_hexad(const Hexad& h);

// {0, b+c-2a, c+d-2a, d+e-2a, e+f-2a, f+b-2a}
Hexad standard_hexad();

// Exhaustive scan over all C(16,6) = 8008 candidate hexads; exactly 192 pass.
std::vector<Hexad> enumerate_weber_hexads();

// An arrangement of {0..4} up to rotation, orientation retained; canonical
// form starts with 0. There are 24; identifying reversed pairs leaves the 12
// unoriented cyclic orders the conic labels live on.
class CyclicOrder {
 public:
  explicit CyclicOrder(std::array<int, 5> seq);
  static CyclicOrder parse(std::string_view digits);  // "02413"

  const std::array<int, 5>& seq() const { return seq_; }
  std::string str() const;

  // The squared cycle (i j k l m) -> (i k m j l): the label of the residual
  // conic in the same plane. Applying it twice gives the reversed cycle.
  CyclicOrder residual() const;
  CyclicOrder reversed() const;
  CyclicOrder relabelled(const std::array<int, 5>& perm) const;
  // Identifies c with its reverse: representative for the unoriented class.
  CyclicOrder unoriented_key() const;

  // True iff the line's two indices are adjacent in the cycle.
  bool meets_line(const LineLabel& l) const;
  // 2 if the node's three indices occupy consecutive positions, else 1.
  int node_profile(const NodeLabel& n) const;

  friend auto operator<=>(const CyclicOrder&, const CyclicOrder&) = default;

 private:
  std::array<int, 5> seq_;  // canonical rotation, seq_[0] == 0
};

std::vector<CyclicOrder> all_cyclic_orders();  // all 24 oriented

// The standard assignment of the hexad members to exceptional-conic labels:
// C_0 -> (02413), C_{b+c-a} -> (03214), C_{c+d-a} -> (01432),
// C_{d+e-a} -> (04312), C_{e+f-a} -> (01324), C_{f+b-a} -> (03421).
std::vector<std::pair<TwoTorsionLabel, CyclicOrder>> conic_labels_standard();

}  // namespace hesskum
