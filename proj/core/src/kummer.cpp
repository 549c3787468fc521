#include "hesskum/kummer.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hesskum {

namespace {

constexpr std::uint8_t kFull = 0b111111;

int letter_bit(char c) {
  if (c < 'a' || c > 'f') throw std::invalid_argument(std::string("bad letter '") + c + "'");
  return c - 'a';
}

std::string bits_str(std::uint8_t bits) {
  if (bits == 0) return "0";
  std::string s;
  for (int b = 0; b < 6; ++b)
    if (bits & (1u << b)) s.push_back(static_cast<char>('a' + b));
  return s;
}

}  // namespace

TwoTorsionLabel TwoTorsionLabel::from_bits(std::uint8_t raw) {
  raw &= kFull;
  if (std::popcount(raw) % 2 != 0)
    throw std::invalid_argument("TwoTorsionLabel: subset must be even");
  TwoTorsionLabel p;
  p.bits_ = std::popcount(raw) <= 2 ? raw : static_cast<std::uint8_t>(raw ^ kFull);
  return p;
}

TwoTorsionLabel TwoTorsionLabel::from_string(std::string_view text) {
  if (text == "0") return zero();
  if (text.size() != 2 || text[0] == text[1])
    throw std::invalid_argument("TwoTorsionLabel: expected \"0\" or two distinct letters");
  std::uint8_t b = 0;
  for (char c : text) b |= static_cast<std::uint8_t>(1u << letter_bit(c));
  return from_bits(b);
}

TwoTorsionLabel TwoTorsionLabel::from_divisor(std::string_view expr) {
  if (expr == "0") return zero();
  // x-a
  if (expr.size() == 3 && expr[1] == '-' && expr[2] == 'a') {
    int x = letter_bit(expr[0]);
    if (x == 0) return zero();  // "a-a" degenerates to 0
    return from_bits(static_cast<std::uint8_t>((1u << x) | 1u));
  }
  // x+y-2a
  if (expr.size() == 6 && expr[1] == '+' && expr.substr(3) == "-2a") {
    int x = letter_bit(expr[0]);
    int y = letter_bit(expr[2]);
    if (x == 0 || y == 0 || x == y)
      throw std::invalid_argument("TwoTorsionLabel: x+y-2a needs distinct letters != a");
    return from_bits(static_cast<std::uint8_t>((1u << x) | (1u << y)));
  }
  throw std::invalid_argument("TwoTorsionLabel: malformed divisor \"" + std::string(expr) + "\"");
}

std::string TwoTorsionLabel::str() const { return bits_str(bits_); }

TropeLabel TropeLabel::from_bits(std::uint8_t raw) {
  raw &= kFull;
  int pc = std::popcount(raw);
  if (pc % 2 != 1) throw std::invalid_argument("TropeLabel: subset must be odd");
  if (pc == 5) {
    raw ^= kFull;
    pc = 1;
  }
  if (pc == 3 && (raw >> 5) & 1u) raw ^= kFull;
  return TropeLabel(raw);
}

TropeLabel TropeLabel::from_string(std::string_view text) {
  std::uint8_t b = 0;
  for (char c : text) {
    std::uint8_t bit = static_cast<std::uint8_t>(1u << letter_bit(c));
    if (b & bit) throw std::invalid_argument("TropeLabel: repeated letter");
    b |= bit;
  }
  return from_bits(b);
}

std::string TropeLabel::str() const { return bits_str(bits_); }

const std::vector<TwoTorsionLabel>& all_two_torsion() {
  static const std::vector<TwoTorsionLabel> pts = [] {
    std::vector<TwoTorsionLabel> out;
    out.push_back(TwoTorsionLabel::zero());
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        out.push_back(TwoTorsionLabel::from_bits(static_cast<std::uint8_t>((1u << i) | (1u << j))));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return pts;
}

const std::vector<TropeLabel>& all_tropes() {
  static const std::vector<TropeLabel> ts = [] {
    std::vector<TropeLabel> out;
    for (unsigned raw = 0; raw < 64; ++raw)
      if (std::popcount(raw) % 2 == 1) {
        TropeLabel t = TropeLabel::from_bits(static_cast<std::uint8_t>(raw));
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return ts;
}

bool incidence(TwoTorsionLabel p, TropeLabel t) {
  int d = std::popcount(static_cast<unsigned>(p.bits() ^ t.bits()));
  return d == 1 || d == 5;
}

Hexad::Hexad(std::array<TwoTorsionLabel, 6> pts) : pts_(pts) {
  std::sort(pts_.begin(), pts_.end());
  for (int i = 0; i + 1 < 6; ++i)
    if (pts_[i] == pts_[i + 1]) throw std::invalid_argument("Hexad: points must be distinct");
}

Hexad Hexad::parse(std::string_view csv) {
  std::array<TwoTorsionLabel, 6> pts;
  std::size_t pos = 0;
  for (int i = 0; i < 6; ++i) {
    std::size_t comma = csv.find(',', pos);
    bool last = (i == 5);
    if (last != (comma == std::string_view::npos))
      throw std::invalid_argument("Hexad: expected six comma-separated points");
    pts[i] = TwoTorsionLabel::from_string(
        csv.substr(pos, last ? std::string_view::npos : comma - pos));
    pos = comma + 1;
  }
  return Hexad(pts);
}

bool Hexad::contains(TwoTorsionLabel p) const {
  return std::find(pts_.begin(), pts_.end(), p) != pts_.end();
}

std::string Hexad::str() const {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << pts_[i].str();
  return os.str();
}

Hexad Hexad::translated(TwoTorsionLabel g) const {
  std::array<TwoTorsionLabel, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = pts_[i] + g;
  return Hexad(out);
}

Hexad Hexad::relettered(const std::array<int, 6>& perm) const {
  std::array<TwoTorsionLabel, 6> out;
  for (int i = 0; i < 6; ++i) {
    std::uint8_t b = 0;
    for (int l = 0; l < 6; ++l)
      if (pts_[i].bits() & (1u << l)) b |= static_cast<std::uint8_t>(1u << perm[l]);
    out[i] = TwoTorsionLabel::from_bits(b);
  }
  return Hexad(out);
}

std::array<int, 16> trope_profile(const Hexad& h) {
  std::array<int, 16> counts{};
  const auto& ts = all_tropes();
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (const auto& p : h.points())
      if (incidence(p, ts[i])) ++counts[i];
  return counts;
}

bool is_weber_hexad(const Hexad& h) {
  auto counts = trope_profile(h);
  int ones = 0, threes = 0;
  for (int c : counts) {
    if (c == 1) ++ones;
    else if (c == 3) ++threes;
    else return false;
  }
  return ones == 6 && threes == 10;
}

Hexad standard_hexad() {
  return Hexad::parse("0,bc,cd,de,ef,fb");
}

std::vector<Hexad> enumerate_weber_hexads() {
  const auto& pts = all_two_torsion();
  std::vector<Hexad> out;
  std::array<int, 6> c{0, 1, 2, 3, 4, 5};
  while (true) {
    Hexad h({pts[c[0]], pts[c[1]], pts[c[2]], pts[c[3]], pts[c[4]], pts[c[5]]});
    if (is_weber_hexad(h)) out.push_back(h);
    int i = 5;
    while (i >= 0 && c[i] == 16 - 6 + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < 6; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

CyclicOrder::CyclicOrder(std::array<int, 5> seq) : seq_(seq) {
  std::array<bool, 5> seen{};
  for (int v : seq_) {
    if (v < 0 || v > 4 || seen[v])
      throw std::invalid_argument("CyclicOrder: need a permutation of 0..4");
    seen[v] = true;
  }
  auto it = std::find(seq_.begin(), seq_.end(), 0);
  std::rotate(seq_.begin(), it, seq_.end());
}

CyclicOrder CyclicOrder::parse(std::string_view digits) {
  if (digits.size() != 5) throw std::invalid_argument("CyclicOrder: expected five digits");
  std::array<int, 5> seq;
  for (int i = 0; i < 5; ++i) seq[i] = digits[i] - '0';
  return CyclicOrder(seq);
}

std::string CyclicOrder::str() const {
  std::string s;
  for (int v : seq_) s.push_back(static_cast<char>('0' + v));
  return s;
}

CyclicOrder CyclicOrder::residual() const {
  return CyclicOrder({seq_[0], seq_[2], seq_[4], seq_[1], seq_[3]});
}

CyclicOrder CyclicOrder::reversed() const {
  return CyclicOrder({seq_[0], seq_[4], seq_[3], seq_[2], seq_[1]});
}

CyclicOrder CyclicOrder::relabelled(const std::array<int, 5>& perm) const {
  std::array<int, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = perm[seq_[i]];
  return CyclicOrder(out);
}

CyclicOrder CyclicOrder::unoriented_key() const {
  CyclicOrder rev = reversed();
  return *this < rev ? *this : rev;
}

bool CyclicOrder::meets_line(const LineLabel& l) const {
  int pi = -1, pj = -1;
  for (int k = 0; k < 5; ++k) {
    if (seq_[k] == l.idx[0]) pi = k;
    if (seq_[k] == l.idx[1]) pj = k;
  }
  int d = (pi - pj + 5) % 5;
  return d == 1 || d == 4;
}

int CyclicOrder::node_profile(const NodeLabel& n) const {
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (meets_line(LineLabel(n.idx[a], n.idx[b]))) ++count;
  // A triple occupying consecutive positions has two internally adjacent
  // pairs; any other triple has exactly one (no independent triple exists
  // in a 5-cycle).
  return count;
}

std::vector<CyclicOrder> all_cyclic_orders() {
  std::vector<CyclicOrder> out;
  std::array<int, 4> rest{1, 2, 3, 4};
  do {
    out.push_back(CyclicOrder({0, rest[0], rest[1], rest[2], rest[3]}));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<TwoTorsionLabel, CyclicOrder>> conic_labels_standard() {
  return {
      {TwoTorsionLabel::zero(), CyclicOrder::parse("02413")},
      {TwoTorsionLabel::from_string("bc"), CyclicOrder::parse("03214")},
      {TwoTorsionLabel::from_string("cd"), CyclicOrder::parse("01432")},
      {TwoTorsionLabel::from_string("de"), CyclicOrder::parse("04312")},
      {TwoTorsionLabel::from_string("ef"), CyclicOrder::parse("01324")},
      {TwoTorsionLabel::from_string("fb"), CyclicOrder::parse("03421")},
  };
}

}  // namespace hesskum
