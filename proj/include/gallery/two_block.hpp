#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gallery/errors.hpp"
#include "gallery/multicolored.hpp"

namespace gallery {

// Set-cover instance whose universe splits into two blocks A and B such that
// every set is an interval inside A plus an interval inside B.  Positions are
// 1-based; an empty part is stored as (0, 0).
struct TwoBlockSet {
  int a_lo = 0, a_hi = 0;
  int b_lo = 0, b_hi = 0;
  std::string label;
  int cls = -1;

  bool covers_a(int pos) const { return a_lo >= 1 && a_lo <= pos && pos <= a_hi; }
  bool covers_b(int pos) const { return b_lo >= 1 && b_lo <= pos && pos <= b_hi; }

  friend bool operator==(const TwoBlockSet& s, const TwoBlockSet& t) {
    return s.a_lo == t.a_lo && s.a_hi == t.a_hi && s.b_lo == t.b_lo && s.b_hi == t.b_hi;
  }
};

enum class ClassKind { Begin, End, Pair, Left, Right };

// Partite class of sets sharing a private element.  Begin(i)/End(i) and
// Pair(i,j) own a private A element, Left(i,j)/Right(i,j) a private B element.
struct PartiteClass {
  ClassKind kind = ClassKind::Begin;
  int i = 0, j = 0;
  std::vector<int> sets;
  std::string label;
  int private_a = 0;
  int private_b = 0;
};

struct TwoBlockInstance {
  int size_a = 0;
  int size_b = 0;
  int budget = 0;
  std::vector<TwoBlockSet> sets;
  std::vector<PartiteClass> classes;
  std::vector<std::string> a_labels;
  std::vector<std::string> b_labels;
  int k = 0;
  int t = 0;

  friend bool operator==(const TwoBlockInstance& x, const TwoBlockInstance& y) {
    return x.size_a == y.size_a && x.size_b == y.size_b && x.budget == y.budget &&
           x.sets == y.sets;
  }
};

namespace detail {

struct TbBuilder {
  const MulticoloredGraph& g;
  bool suppress;
  TwoBlockInstance out;
  std::map<std::tuple<int, int, int>, int> xpos;  // (i, column, a)
  std::map<int, int> xb, xe, wb, we;
  std::map<std::pair<int, int>, int> zb, ze, yb, ye;
  std::map<std::tuple<int, int, int>, int> zpos, ypos;  // (i, j, index)
  std::map<std::tuple<int, int, int, int>, int> class_at;

  explicit TbBuilder(const MulticoloredGraph& graph, bool suppress_empty)
      : g(graph), suppress(suppress_empty) {}

  bool pair_active(int i, int j) const {
    if (i > j) std::swap(i, j);
    return !suppress || !g.pair_edges(i, j).empty();
  }

  // Columns of the vertex gadget of class i: every other class whose pair
  // survives, plus the closing column k+1.
  std::vector<int> columns(int i) const {
    std::vector<int> cols;
    for (int j = 1; j <= g.k; ++j)
      if (j != i && pair_active(i, j)) cols.push_back(j);
    cols.push_back(g.k + 1);
    return cols;
  }

  int next_column(int i, int j) const {
    auto cols = columns(i);
    for (size_t p = 0; p + 1 < cols.size(); ++p)
      if (cols[p] == j) return cols[p + 1];
    throw InvalidInstance("column has no successor");
  }

  int add_a(const std::string& label) {
    out.a_labels.push_back(label);
    return static_cast<int>(out.a_labels.size());
  }

  int add_b(const std::string& label) {
    out.b_labels.push_back(label);
    return static_cast<int>(out.b_labels.size());
  }

  void build_elements() {
    for (int i = 1; i <= g.k; ++i) {
      xb[i] = add_a("xb[" + std::to_string(i) + "]");
      for (int j : columns(i))
        for (int a = 1; a <= g.t; ++a)
          xpos[{i, j, a}] = add_a("x[" + std::to_string(i) + ";" + std::to_string(j) + ";" +
                                  std::to_string(a) + "]");
      xe[i] = add_a("xe[" + std::to_string(i) + "]");
    }
    for (int i = 1; i <= g.k; ++i)
      for (int j = i + 1; j <= g.k; ++j) {
        if (!pair_active(i, j)) continue;
        const int m = static_cast<int>(g.pair_edges(i, j).size());
        const std::string ij = std::to_string(i) + ";" + std::to_string(j);
        zb[{i, j}] = add_a("zb[" + ij + "]");
        for (int c = 1; c <= m; ++c)
          zpos[{i, j, c}] = add_a("z[" + ij + ";" + std::to_string(c) + "]");
        ze[{i, j}] = add_a("ze[" + ij + "]");
      }
    for (int i = 1; i <= g.k; ++i)
      for (int j = i + 1; j <= g.k; ++j) {
        if (!pair_active(i, j)) continue;
        const int m = static_cast<int>(g.pair_edges(i, j).size());
        const std::string ij = std::to_string(i) + ";" + std::to_string(j);
        yb[{i, j}] = add_b("yb[" + ij + "]");
        for (int c = 1; c <= 3 * m; ++c)
          ypos[{i, j, c}] = add_b("y[" + ij + ";" + std::to_string(c) + "]");
        ye[{i, j}] = add_b("ye[" + ij + "]");
      }
    for (int i = 1; i <= g.k; ++i) {
      wb[i] = add_b("wb[" + std::to_string(i) + "]");
      for (int q = 1; q <= g.t; ++q)
        ypos[{i, 0, q}] = add_b("w[" + std::to_string(i) + ";" + std::to_string(q) + "]");
      we[i] = add_b("we[" + std::to_string(i) + "]");
    }
    out.size_a = static_cast<int>(out.a_labels.size());
    out.size_b = static_cast<int>(out.b_labels.size());
  }

  int wpos(int i, int q) const { return ypos.at({i, 0, q}); }

  void build_classes() {
    auto add_class = [&](ClassKind kind, int i, int j, std::string label, int pa, int pb) {
      PartiteClass c;
      c.kind = kind;
      c.i = i;
      c.j = j;
      c.label = std::move(label);
      c.private_a = pa;
      c.private_b = pb;
      class_at[{static_cast<int>(kind), i, j, 0}] = static_cast<int>(out.classes.size());
      out.classes.push_back(std::move(c));
    };
    for (int i = 1; i <= g.k; ++i) {
      add_class(ClassKind::Begin, i, 0, "Begin[" + std::to_string(i) + "]", xb[i], 0);
      add_class(ClassKind::End, i, 0, "End[" + std::to_string(i) + "]", xe[i], 0);
    }
    // Classes of one pair gadget stay adjacent so that searches detect their
    // coupling early.
    for (int i = 1; i <= g.k; ++i)
      for (int j = i + 1; j <= g.k; ++j) {
        if (!pair_active(i, j)) continue;
        const std::string ij = std::to_string(i) + ";" + std::to_string(j);
        const std::string ji = std::to_string(j) + ";" + std::to_string(i);
        add_class(ClassKind::Pair, i, j, "Pair[" + ij + "]", xpos.at({i, j, g.t}), 0);
        add_class(ClassKind::Pair, j, i, "Pair[" + ji + "]", xpos.at({j, i, g.t}), 0);
        add_class(ClassKind::Left, i, j, "Left[" + ij + "]", 0, yb.at({i, j}));
        add_class(ClassKind::Right, i, j, "Right[" + ij + "]", 0, ye.at({i, j}));
      }
    out.budget = static_cast<int>(out.classes.size());
  }

  int class_index(ClassKind kind, int i, int j) const {
    return class_at.at({static_cast<int>(kind), i, j, 0});
  }

  void add_set(TwoBlockSet s, int cls) {
    s.cls = cls;
    out.classes[cls].sets.push_back(static_cast<int>(out.sets.size()));
    out.sets.push_back(std::move(s));
  }

  void build_sets() {
    for (int i = 1; i <= g.k; ++i)
      for (int j = i + 1; j <= g.k; ++j) {
        if (!pair_active(i, j)) continue;
        const auto edges = g.pair_edges(i, j);
        const int m = static_cast<int>(edges.size());
        const std::string ij = std::to_string(i) + ";" + std::to_string(j);
        for (int c = 1; c <= m; ++c) {
          const auto [a, b] = edges[c - 1];
          const std::string ijc = ij + ";" + std::to_string(c);
          TwoBlockSet sl;
          sl.a_lo = xpos.at({i, j, a});
          sl.a_hi = a == 1 ? xpos.at({i, j, g.t}) : xpos.at({i, next_column(i, j), a - 1});
          sl.b_lo = ypos.at({i, j, c});
          sl.b_hi = ypos.at({i, j, c + m - 1});
          sl.label = "Sv[" + ijc + ";L]";
          add_set(sl, class_index(ClassKind::Pair, i, j));

          TwoBlockSet sr;
          sr.a_lo = xpos.at({j, i, b});
          sr.a_hi = b == 1 ? xpos.at({j, i, g.t}) : xpos.at({j, next_column(j, i), b - 1});
          sr.b_lo = ypos.at({i, j, c + m});
          sr.b_hi = ypos.at({i, j, c + 2 * m - 1});
          sr.label = "Sv[" + ijc + ";R]";
          add_set(sr, class_index(ClassKind::Pair, j, i));

          TwoBlockSet tl;
          tl.a_lo = zb.at({i, j});
          tl.a_hi = c == m ? zb.at({i, j}) : zpos.at({i, j, m - c});
          tl.b_lo = yb.at({i, j});
          tl.b_hi = c == 1 ? yb.at({i, j}) : ypos.at({i, j, c - 1});
          tl.label = "St[" + ijc + ";L]";
          add_set(tl, class_index(ClassKind::Left, i, j));

          TwoBlockSet tr;
          tr.a_lo = zpos.at({i, j, m - c + 1});
          tr.a_hi = ze.at({i, j});
          tr.b_lo = ypos.at({i, j, c + 2 * m});
          tr.b_hi = ye.at({i, j});
          tr.label = "St[" + ijc + ";R]";
          add_set(tr, class_index(ClassKind::Right, i, j));
        }
      }
    for (int i = 1; i <= g.k; ++i) {
      const int first = columns(i).front();
      for (int a = 1; a <= g.t; ++a) {
        TwoBlockSet sb;
        sb.a_lo = xb.at(i);
        sb.a_hi = a == 1 ? xb.at(i) : xpos.at({i, first, a - 1});
        sb.b_lo = wb.at(i);
        sb.b_hi = wpos(i, g.t - a + 1);
        sb.label = "Sb[" + std::to_string(i) + ";" + std::to_string(a) + "]";
        add_set(sb, class_index(ClassKind::Begin, i, 0));

        TwoBlockSet se;
        se.a_lo = xpos.at({i, g.k + 1, a});
        se.a_hi = xe.at(i);
        se.b_lo = a == 1 ? we.at(i) : wpos(i, g.t - a + 2);
        se.b_hi = we.at(i);
        se.label = "Se[" + std::to_string(i) + ";" + std::to_string(a) + "]";
        add_set(se, class_index(ClassKind::End, i, 0));
      }
    }
  }
};

}  // namespace detail

// Materializes the two-block set-cover instance of a multicolored graph: one
// vertex gadget per class, one edge gadget per surviving pair, with partite
// set classes whose private elements force one pick per class.  By default
// every pair contributes a gadget even when it has no edges, which keeps the
// cover question equivalent to the clique question on all graphs; passing
// suppress_empty_pairs drops the empty gadgets (and their columns), shrinking
// the budget accordingly.
inline TwoBlockInstance build_two_block(const MulticoloredGraph& g,
                                        bool suppress_empty_pairs = false) {
  g.validate();
  detail::TbBuilder builder(g, suppress_empty_pairs);
  builder.build_elements();
  builder.build_classes();
  builder.build_sets();
  builder.out.k = g.k;
  builder.out.t = g.t;
  return builder.out;
}

// True iff |chosen| fits the budget (when enforced) and the chosen sets cover
// every element of both blocks.
inline bool verify_two_block_solution(const TwoBlockInstance& inst,
                                      const std::vector<int>& chosen,
                                      bool enforce_budget = true) {
  for (int s : chosen)
    if (s < 0 || s >= static_cast<int>(inst.sets.size()))
      throw InvalidInstance("set index out of range");
  if (enforce_budget && static_cast<int>(chosen.size()) > inst.budget) return false;
  for (int pos = 1; pos <= inst.size_a; ++pos) {
    bool hit = false;
    for (int s : chosen)
      if (inst.sets[s].covers_a(pos)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  for (int pos = 1; pos <= inst.size_b; ++pos) {
    bool hit = false;
    for (int s : chosen)
      if (inst.sets[s].covers_b(pos)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace gallery
