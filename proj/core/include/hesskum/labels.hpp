#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace hesskum {

// Node p_{ijk} = V(X_i, X_j, X_k): three distinct indices in {0..4}, sorted.
struct NodeLabel {
  std::array<int, 3> idx;

  NodeLabel(int i, int j, int k) : idx{i, j, k} {
    std::sort(idx.begin(), idx.end());
    if (idx[0] < 0 || idx[2] > 4 || idx[0] == idx[1] || idx[1] == idx[2])
      throw std::invalid_argument("NodeLabel: need three distinct indices in 0..4");
  }
  bool contains(int i) const { return idx[0] == i || idx[1] == i || idx[2] == i; }
  std::string str() const {
    return "p" + std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]);
  }
  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

// Line l_{ij} = V(X_i, X_j): two distinct indices in {0..4}, sorted.
struct LineLabel {
  std::array<int, 2> idx;

  LineLabel(int i, int j) : idx{i, j} {
    if (i > j) std::swap(idx[0], idx[1]);
    if (idx[0] < 0 || idx[1] > 4 || idx[0] == idx[1])
      throw std::invalid_argument("LineLabel: need two distinct indices in 0..4");
  }
  bool contains(int i) const { return idx[0] == i || idx[1] == i; }
  std::string str() const { return "l" + std::to_string(idx[0]) + std::to_string(idx[1]); }
  friend bool operator==(const LineLabel&, const LineLabel&) = default;
};

}  // namespace hesskum
