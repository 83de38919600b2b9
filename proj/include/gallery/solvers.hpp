#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gallery/errors.hpp"
#include "gallery/multicolored.hpp"
#include "gallery/sths.hpp"
#include "gallery/two_block.hpp"

namespace gallery {

inline constexpr std::int64_t kDefaultMaxEnum = 10'000'000;

// First multicolored clique in lexicographic order, as one vertex per class.
inline std::optional<std::vector<int>> solve_clique_bf(const MulticoloredGraph& g,
                                                       std::int64_t max_enum = kDefaultMaxEnum) {
  g.validate();
  std::int64_t total = 1;
  for (int i = 0; i < g.k; ++i) {
    if (total > max_enum / g.t + 1) throw TooLarge("clique search space exceeds limit");
    total *= g.t;
  }
  if (total > max_enum) throw TooLarge("clique search space exceeds limit");

  std::vector<int> pick(g.k, 1);
  std::vector<std::vector<std::vector<bool>>> adj(
      g.k + 1, std::vector<std::vector<bool>>(g.k + 1));
  for (int i = 1; i <= g.k; ++i)
    for (int j = 1; j <= g.k; ++j)
      if (i != j) adj[i][j].assign(static_cast<size_t>(g.t) * g.t, false);
  for (const auto& e : g.edges) {
    const auto [i, a, j, b] = e;
    adj[i][j][static_cast<size_t>(a - 1) * g.t + (b - 1)] = true;
    adj[j][i][static_cast<size_t>(b - 1) * g.t + (a - 1)] = true;
  }

  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == g.k) {
      found = pick;
      return true;
    }
    for (int a = 1; a <= g.t; ++a) {
      pick[depth] = a;
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev)
        ok = adj[prev + 1][depth + 1][static_cast<size_t>(pick[prev] - 1) * g.t + (a - 1)];
      if (ok && self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

// First cover (lexicographic over per-class picks) choosing exactly one set
// from each partite class.  Complete for instances whose classes carry
// private elements: any cover within the budget uses one set per class.
// Branches die as soon as some element has every class that could cover it
// already assigned; max_enum bounds the number of search nodes.
inline std::optional<std::vector<int>> solve_setcover_bf(const TwoBlockInstance& tb,
                                                         std::int64_t max_enum = kDefaultMaxEnum) {
  for (const auto& pc : tb.classes)
    if (pc.sets.empty()) return std::nullopt;

  const int n_a = tb.size_a, n_b = tb.size_b;
  std::vector<int> last_a(n_a + 1, -1), last_b(n_b + 1, -1);
  for (const auto& s : tb.sets) {
    if (s.a_lo >= 1)
      for (int p = s.a_lo; p <= s.a_hi; ++p) last_a[p] = std::max(last_a[p], s.cls);
    if (s.b_lo >= 1)
      for (int p = s.b_lo; p <= s.b_hi; ++p) last_b[p] = std::max(last_b[p], s.cls);
  }
  for (int p = 1; p <= n_a; ++p)
    if (last_a[p] < 0) return std::nullopt;
  for (int p = 1; p <= n_b; ++p)
    if (last_b[p] < 0) return std::nullopt;
  std::vector<std::vector<int>> due_a(tb.classes.size()), due_b(tb.classes.size());
  for (int p = 1; p <= n_a; ++p) due_a[last_a[p]].push_back(p);
  for (int p = 1; p <= n_b; ++p) due_b[last_b[p]].push_back(p);

  std::vector<int> depth_a(n_a + 1, 0), depth_b(n_b + 1, 0);
  std::vector<int> chosen;
  std::optional<std::vector<int>> found;
  std::int64_t nodes = 0;

  auto apply = [&](int s, int dir) {
    const auto& set = tb.sets[s];
    if (set.a_lo >= 1)
      for (int p = set.a_lo; p <= set.a_hi; ++p) depth_a[p] += dir;
    if (set.b_lo >= 1)
      for (int p = set.b_lo; p <= set.b_hi; ++p) depth_b[p] += dir;
  };

  auto rec = [&](auto&& self, size_t depth) -> bool {
    if (depth == tb.classes.size()) {
      found = chosen;
      std::sort(found->begin(), found->end());
      return true;
    }
    for (int s : tb.classes[depth].sets) {
      if (++nodes > max_enum) throw TooLarge("cover search space exceeds limit");
      chosen.push_back(s);
      apply(s, +1);
      bool ok = true;
      for (int p : due_a[depth])
        if (depth_a[p] == 0) {
          ok = false;
          break;
        }
      if (ok)
        for (int p : due_b[depth])
          if (depth_b[p] == 0) {
            ok = false;
            break;
          }
      if (ok && self(self, depth + 1)) return true;
      apply(s, -1);
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

// First hitting set in lexicographic order over per-class rank choices.
// Prunes a branch as soon as some interval has every class of its span
// assigned without a hit.
inline std::optional<std::vector<int>> solve_sths_bf(const STHSInstance& inst,
                                                     std::int64_t max_enum = kDefaultMaxEnum) {
  inst.validate();
  for (const auto& iv : inst.s_a)
    if (iv.empty()) return std::nullopt;
  for (const auto& iv : inst.s_b)
    if (iv.empty()) return std::nullopt;

  // last_chance[j]: intervals fully decided once classes 1..j are assigned.
  std::vector<std::vector<int>> last_a(inst.k + 1), last_b(inst.k + 1);
  for (size_t x = 0; x < inst.s_a.size(); ++x)
    last_a[inst.s_a[x].j_hi].push_back(static_cast<int>(x));
  for (size_t x = 0; x < inst.s_b.size(); ++x) {
    int last = 0;
    for (int p = inst.s_b[x].j_lo; p <= inst.s_b[x].j_hi; ++p)
      last = std::max(last, inst.sigma[p - 1]);
    last_b[last].push_back(static_cast<int>(x));
  }

  std::vector<int> choice(inst.k, 0);
  std::vector<std::vector<int>> inv(inst.k);  // per class: A rank -> B rank
  for (int j = 1; j <= inst.k; ++j) {
    inv[j - 1].assign(inst.t, 0);
    for (int r = 1; r <= inst.t; ++r) inv[j - 1][inst.sigma_j[j - 1][r - 1] - 1] = r;
  }

  auto hit_a = [&](const TrackInterval& iv) {
    for (int j = iv.j_lo; j <= iv.j_hi; ++j)
      if (iv.contains(j, choice[j - 1])) return true;
    return false;
  };
  auto hit_b = [&](const TrackInterval& iv) {
    for (int p = iv.j_lo; p <= iv.j_hi; ++p) {
      const int j = inst.sigma[p - 1];
      if (iv.contains(p, inv[j - 1][choice[j - 1] - 1])) return true;
    }
    return false;
  };

  std::int64_t nodes = 0;
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == inst.k) {
      found = choice;
      return true;
    }
    for (int r = 1; r <= inst.t; ++r) {
      if (++nodes > max_enum) throw TooLarge("hitting set search space exceeds limit");
      choice[depth] = r;
      bool ok = true;
      for (int x : last_a[depth + 1])
        if (!hit_a(inst.s_a[x])) {
          ok = false;
          break;
        }
      if (ok)
        for (int x : last_b[depth + 1])
          if (!hit_b(inst.s_b[x])) {
            ok = false;
            break;
          }
      if (ok && self(self, depth + 1)) return true;
    }
    choice[depth] = 0;
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace gallery
