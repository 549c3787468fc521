#include "hesskum/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hesskum {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("PolyRing: duplicate variable " + names_[i]);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("PolyRing: unknown variable " + std::string(name));
  return *i;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.ring_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::var(RingPtr ring, std::size_t index, unsigned exp) {
  if (index >= ring->size()) throw std::out_of_range("MultiPoly::var: index out of range");
  MultiPoly p(std::move(ring));
  Exponents e(p.ring_->size(), 0);
  e[index] = exp;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::var(RingPtr ring, std::string_view name, unsigned exp) {
  std::size_t i = ring->require(name);
  return var(std::move(ring), i, exp);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree() == 0;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("MultiPoly::constant_value: not a constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;  // graded order: last term has max degree
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d0 = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != d0) return false;
  return true;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (!ring_) throw std::logic_error("MultiPoly: no ring");
  if (exps.size() != ring_->size())
    throw std::invalid_argument("MultiPoly::add_term: exponent vector length mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!ring_ || !o.ring_) throw std::logic_error("MultiPoly: missing ring");
  if (ring_ == o.ring_) return;
  if (!(*ring_ == *o.ring_))
    throw std::invalid_argument("MultiPoly: incompatible variable tables");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.ring_);
  const std::size_t n = a.ring_->size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  if (!ring_) throw std::logic_error("MultiPoly: no ring");
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    if (e >>= 1u) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  if (!ring_) throw std::logic_error("MultiPoly: no ring");
  if (var >= ring_->size()) throw std::invalid_argument("MultiPoly::substitute: unknown variable");
  check_compatible(value);
  // Group by the exponent of var, then Horner over cached powers.
  std::map<unsigned, MultiPoly> by_exp;
  for (const auto& [e, c] : terms_) {
    unsigned k = e[var];
    Exponents rest = e;
    rest[var] = 0;
    auto [it, fresh] = by_exp.try_emplace(k, ring_);
    it->second.add_term(rest, c);
  }
  MultiPoly result(ring_);
  MultiPoly power = constant(ring_, Rational(1));
  unsigned cur = 0;
  for (auto& [k, part] : by_exp) {
    while (cur < k) {
      power *= value;
      ++cur;
    }
    result += part * power;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  return substitute(ring_->require(var), value);
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  return substitute(var, constant(ring_, value));
}

MultiPoly MultiPoly::coeff_in(std::size_t var, unsigned k) const {
  if (!ring_ || var >= ring_->size())
    throw std::invalid_argument("MultiPoly::coeff_in: unknown variable");
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents rest = e;
    rest[var] = 0;
    r.add_term(rest, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (!ring_ || var >= ring_->size())
    throw std::invalid_argument("MultiPoly::derivative: unknown variable");
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (!ring_) throw std::logic_error("MultiPoly: no ring");
  if (point.size() != ring_->size())
    throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= point[i].pow(e[i]);
    total += t;
  }
  return total;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::domain_error("MultiPoly::divide_exact: zero divisor");
  MultiPoly rem = *this;
  MultiPoly quot(ring_);
  const auto& dlt = *divisor.terms_.rbegin();  // leading term in graded-lex
  const std::size_t n = ring_->size();
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms_.rbegin();
    Exponents q(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rlt.first[i] < dlt.first[i]) return std::nullopt;
      q[i] = rlt.first[i] - dlt.first[i];
    }
    Rational qc = rlt.second / dlt.second;
    quot.add_term(q, qc);
    MultiPoly t(ring_);
    t.add_term(q, qc);
    rem -= t * divisor;
  }
  return quot;
}

MultiPoly MultiPoly::in_ring(const RingPtr& target) const {
  if (!ring_) throw std::logic_error("MultiPoly: no ring");
  std::vector<std::optional<std::size_t>> where(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) where[i] = target->index_of(ring_->name(i));
  MultiPoly r(target);
  Exponents e2(target->size());
  for (const auto& [e, c] : terms_) {
    std::fill(e2.begin(), e2.end(), 0u);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i])
        throw std::invalid_argument("MultiPoly::in_ring: variable " + ring_->name(i) +
                                    " absent from target ring");
      e2[*where[i]] = e[i];
    }
    r.add_term(e2, c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool any_var = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
    bool printed = false;
    if (!a.is_one() || !any_var) {
      os << a.str();
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->name(i);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

std::optional<Rational> proportional_ratio(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw std::domain_error("proportional_ratio: zero reference polynomial");
  if (p.is_zero()) return Rational(0);
  const auto& qt = q.terms();
  const auto& pt = p.terms();
  if (pt.size() != qt.size()) return std::nullopt;
  Rational c = pt.rbegin()->second / qt.rbegin()->second;
  auto ip = pt.begin();
  auto iq = qt.begin();
  for (; ip != pt.end(); ++ip, ++iq) {
    if (ip->first != iq->first) return std::nullopt;
    if (ip->second != c * iq->second) return std::nullopt;
  }
  return c;
}

}  // namespace hesskum
