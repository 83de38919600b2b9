#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "gallery/errors.hpp"

namespace gallery {

// Multicolored graph: k classes of t vertices; edges only between classes.
// Edge (i, a, j, b) joins vertex a of class i with vertex b of class j, i < j.
struct MulticoloredGraph {
  int k = 0;
  int t = 0;
  std::vector<std::array<int, 4>> edges;

  void validate() const {
    if (k < 1 || t < 1) throw InvalidInstance("graph needs k >= 1 and t >= 1");
    std::set<std::array<int, 4>> seen;
    for (const auto& e : edges) {
      const auto [i, a, j, b] = e;
      if (i < 1 || j > k || i >= j) throw InvalidInstance("edge classes out of range");
      if (a < 1 || a > t || b < 1 || b > t) throw InvalidInstance("edge vertices out of range");
      if (!seen.insert(e).second) throw InvalidInstance("duplicate edge");
    }
  }

  bool has_edge(int i, int a, int j, int b) const {
    if (i > j) {
      std::swap(i, j);
      std::swap(a, b);
    }
    for (const auto& e : edges)
      if (e[0] == i && e[1] == a && e[2] == j && e[3] == b) return true;
    return false;
  }

  // Edges between classes i < j in the canonical order (lexicographic by
  // endpoint indices), fixing the e^{ij}_c numbering.
  std::vector<std::pair<int, int>> pair_edges(int i, int j) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges)
      if (e[0] == i && e[2] == j) out.emplace_back(e[1], e[3]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<int, int>> nonempty_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (!pair_edges(i, j).empty()) out.emplace_back(i, j);
    return out;
  }
};

}  // namespace gallery
