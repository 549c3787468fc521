#pragma once

#include <vector>

#include "hesskum/polynomial.hpp"

namespace hesskum {

// Rectangular grid of polynomials over one shared variable table.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  MultiPoly& at(std::size_t r, std::size_t c);
  const MultiPoly& at(std::size_t r, std::size_t c) const;

  // Exact symbolic determinant (square matrices only). Uses fraction-free
  // Bareiss elimination; every intermediate division is exact.
  MultiPoly determinant() const;

  // All k x k minors in row-major combination order: row index sets ascend
  // lexicographically, and for each row set the column sets ascend.
  std::vector<MultiPoly> minors(std::size_t k) const;

  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

  std::vector<MultiPoly> apply(const std::vector<MultiPoly>& v) const;

 private:
  std::size_t rows_, cols_;
  RingPtr ring_;
  std::vector<MultiPoly> data_;
};

}  // namespace hesskum
