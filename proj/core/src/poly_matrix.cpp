#include "hesskum/poly_matrix.hpp"

#include <stdexcept>

namespace hesskum {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)) {
  data_.assign(rows_ * cols_, MultiPoly::zero(ring_));
}

MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix::at");
  return data_[r * cols_ + c];
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix::at");
  return data_[r * cols_ + c];
}

MultiPoly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = rows_;
  if (n == 0) return MultiPoly::constant(ring_, Rational(1));
  std::vector<MultiPoly> a = data_;
  auto idx = [this](std::size_t r, std::size_t c) { return r * cols_ + c; };
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(ring_, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[idx(k, k)].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[idx(p, k)].is_zero()) ++p;
      if (p == n) return MultiPoly::zero(ring_);
      for (std::size_t c = 0; c < n; ++c) std::swap(a[idx(k, c)], a[idx(p, c)]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[idx(i, j)] * a[idx(k, k)] - a[idx(i, k)] * a[idx(k, j)];
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("determinant: Bareiss division not exact");
        a[idx(i, j)] = std::move(*q);
      }
      a[idx(i, k)] = MultiPoly::zero(ring_);
    }
    prev = a[idx(k, k)];
  }
  MultiPoly det = a[idx(n - 1, n - 1)];
  return sign < 0 ? -det : det;
}

static std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

static bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<MultiPoly> PolyMatrix::minors(std::size_t k) const {
  if (k == 0 || k > rows_ || k > cols_)
    throw std::invalid_argument("minors: size out of range");
  std::vector<MultiPoly> out;
  auto rsel = first_combination(k);
  do {
    auto csel = first_combination(k);
    do {
      out.push_back(submatrix(rsel, csel).determinant());
    } while (next_combination(csel, cols_));
  } while (next_combination(rsel, rows_));
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix s(rows.size(), cols.size(), ring_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
  return s;
}

std::vector<MultiPoly> PolyMatrix::apply(const std::vector<MultiPoly>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("PolyMatrix::apply: dimension mismatch");
  std::vector<MultiPoly> out(rows_, MultiPoly::zero(ring_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

}  // namespace hesskum
