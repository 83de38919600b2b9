#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gallery/errors.hpp"
#include "gallery/two_block.hpp"

namespace gallery {

// Interval of consecutive track positions, written as lexicographic bounds on
// (class slot, rank within class), both 1-based inclusive.  An interval with
// hi < lo is empty and therefore unhittable.
struct TrackInterval {
  int j_lo = 1, i_lo = 1;
  int j_hi = 0, i_hi = 0;
  std::string label;

  bool contains(int j, int i) const {
    if (j < j_lo || (j == j_lo && i < i_lo)) return false;
    if (j > j_hi || (j == j_hi && i > i_hi)) return false;
    return true;
  }
  bool empty() const { return j_hi < j_lo || (j_hi == j_lo && i_hi < i_lo); }

  friend bool operator==(const TrackInterval& a, const TrackInterval& b) {
    return a.j_lo == b.j_lo && a.i_lo == b.i_lo && a.j_hi == b.j_hi && a.i_hi == b.i_hi;
  }
};

// Structured 2-track hitting set instance: k classes of t entries each, laid
// out on track A in class order 1..k and on track B in class order
// sigma(1..k), with entry ranks inside class j permuted by sigma_j on track B.
// A solution picks one A-rank per class; it must hit every interval on both
// tracks.  Entries with rank above real_size[j] are inert padding that belongs
// to no interval's generating set (they can sit inside an interval's span,
// which is harmless because every class also carries private intervals that
// only real ranks hit).
struct STHSInstance {
  int k = 0;
  int t = 0;
  std::vector<int> sigma;                 // B slot -> class, size k
  std::vector<std::vector<int>> sigma_j;  // per class: B rank -> A rank, size t
  std::vector<TrackInterval> s_a;
  std::vector<TrackInterval> s_b;
  std::vector<int> real_size;  // per class: count of non-dummy entries
  std::vector<std::string> class_labels;

  void validate() const {
    if (k < 1 || t < 1) throw InvalidInstance("instance needs k >= 1 and t >= 1");
    if (static_cast<int>(sigma.size()) != k) throw InvalidInstance("sigma size mismatch");
    std::vector<bool> seen(k + 1, false);
    for (int j : sigma) {
      if (j < 1 || j > k || seen[j]) throw InvalidInstance("sigma is not a permutation");
      seen[j] = true;
    }
    if (static_cast<int>(sigma_j.size()) != k) throw InvalidInstance("sigma_j size mismatch");
    for (const auto& perm : sigma_j) {
      if (static_cast<int>(perm.size()) != t) throw InvalidInstance("sigma_j entry size mismatch");
      std::vector<bool> hit(t + 1, false);
      for (int r : perm) {
        if (r < 1 || r > t || hit[r]) throw InvalidInstance("sigma_j entry is not a permutation");
        hit[r] = true;
      }
    }
    for (const auto& iv : s_a)
      if (!iv.empty() && (iv.j_lo < 1 || iv.j_hi > k || iv.i_lo < 1 || iv.i_lo > t ||
                          iv.i_hi < 1 || iv.i_hi > t))
        throw InvalidInstance("A interval out of range");
    for (const auto& iv : s_b)
      if (!iv.empty() && (iv.j_lo < 1 || iv.j_hi > k || iv.i_lo < 1 || iv.i_lo > t ||
                          iv.i_hi < 1 || iv.i_hi > t))
        throw InvalidInstance("B interval out of range");
  }

  int b_slot_of_class(int j) const {
    for (int p = 1; p <= k; ++p)
      if (sigma[p - 1] == j) return p;
    throw InvalidInstance("class missing from sigma");
  }

  int b_rank_of(int j, int a_rank) const {
    const auto& perm = sigma_j[j - 1];
    for (int r = 1; r <= t; ++r)
      if (perm[r - 1] == a_rank) return r;
    throw InvalidInstance("rank missing from sigma_j");
  }
};

// Checks a choice of one A-rank per class against every interval on both
// tracks; returns the label of the first unhit interval, or nullopt when the
// choice is a valid hitting set.
inline std::optional<std::string> sths_first_unhit(const STHSInstance& inst,
                                                   const std::vector<int>& choice) {
  inst.validate();
  if (static_cast<int>(choice.size()) != inst.k)
    throw InvalidInstance("choice must pick one rank per class");
  for (int r : choice)
    if (r < 1 || r > inst.t) throw InvalidInstance("chosen rank out of range");
  for (const auto& iv : inst.s_a) {
    bool hit = false;
    for (int j = 1; j <= inst.k && !hit; ++j) hit = iv.contains(j, choice[j - 1]);
    if (!hit) return iv.label.empty() ? std::string("A interval") : iv.label;
  }
  for (const auto& iv : inst.s_b) {
    bool hit = false;
    for (int j = 1; j <= inst.k && !hit; ++j) {
      const int p = inst.b_slot_of_class(j);
      const int r = inst.b_rank_of(j, choice[j - 1]);
      hit = iv.contains(p, r);
    }
    if (!hit) return iv.label.empty() ? std::string("B interval") : iv.label;
  }
  return std::nullopt;
}

inline bool verify_sths_solution(const STHSInstance& inst, const std::vector<int>& choice) {
  return !sths_first_unhit(inst, choice).has_value();
}

namespace detail {

struct ClassPlacement {
  int cls = -1;                 // index into TwoBlockInstance::classes
  std::vector<int> a_order;     // rank -> set index
  std::vector<int> b_order;
};

inline std::vector<int> sorted_sets(const TwoBlockInstance& tb, const std::vector<int>& sets,
                                    bool by_a) {
  std::vector<int> order = sets;
  std::stable_sort(order.begin(), order.end(), [&](int s, int t) {
    const auto& u = tb.sets[s];
    const auto& v = tb.sets[t];
    const int ul = by_a ? u.a_lo : u.b_lo, uh = by_a ? u.a_hi : u.b_hi;
    const int vl = by_a ? v.a_lo : v.b_lo, vh = by_a ? v.a_hi : v.b_hi;
    if (ul != vl) return ul < vl;
    if (uh != vh) return uh < vh;
    return s < t;
  });
  return order;
}

}  // namespace detail

// Flattens a two-block instance onto two tracks.  Track A lists the classes
// gadget by gadget (Begin(i), Pair(i,*), End(i) for each color, then the
// Left/Right pairs); track B interleaves them pairwise (Left, Pair(i,j),
// Pair(j,i), Right, then Begin/End).  Within a class, entries sort by the
// interval endpoints on the respective track.  Classes are padded to a common
// size t with inert entries at the tail of both tracks.  Each element of the
// cover instance becomes one interval spanning exactly the entries whose set
// contains it; elements no set contains become empty (unhittable) intervals.
inline STHSInstance build_sths(const TwoBlockInstance& tb) {
  std::map<std::tuple<int, int, int>, int> lookup;  // (kind, i, j) -> class index
  for (size_t c = 0; c < tb.classes.size(); ++c) {
    const auto& pc = tb.classes[c];
    lookup[{static_cast<int>(pc.kind), pc.i, pc.j}] = static_cast<int>(c);
  }
  auto has = [&](ClassKind kind, int i, int j) {
    return lookup.count({static_cast<int>(kind), i, j}) > 0;
  };
  auto at = [&](ClassKind kind, int i, int j) {
    return lookup.at({static_cast<int>(kind), i, j});
  };

  std::vector<int> a_seq, b_seq;
  for (int i = 1; i <= tb.k; ++i) {
    a_seq.push_back(at(ClassKind::Begin, i, 0));
    for (int j = 1; j <= tb.k; ++j)
      if (j != i && has(ClassKind::Pair, i, j)) a_seq.push_back(at(ClassKind::Pair, i, j));
    a_seq.push_back(at(ClassKind::End, i, 0));
  }
  for (int i = 1; i <= tb.k; ++i)
    for (int j = i + 1; j <= tb.k; ++j)
      if (has(ClassKind::Left, i, j)) {
        a_seq.push_back(at(ClassKind::Left, i, j));
        a_seq.push_back(at(ClassKind::Right, i, j));
      }
  for (int i = 1; i <= tb.k; ++i)
    for (int j = i + 1; j <= tb.k; ++j)
      if (has(ClassKind::Left, i, j)) {
        b_seq.push_back(at(ClassKind::Left, i, j));
        b_seq.push_back(at(ClassKind::Pair, i, j));
        b_seq.push_back(at(ClassKind::Pair, j, i));
        b_seq.push_back(at(ClassKind::Right, i, j));
      }
  for (int i = 1; i <= tb.k; ++i) {
    b_seq.push_back(at(ClassKind::Begin, i, 0));
    b_seq.push_back(at(ClassKind::End, i, 0));
  }
  if (a_seq.size() != tb.classes.size() || b_seq.size() != tb.classes.size())
    throw InvalidInstance("class sequences disagree with class list");

  STHSInstance out;
  out.k = static_cast<int>(a_seq.size());
  int maxsz = 1;
  for (const auto& pc : tb.classes)
    maxsz = std::max(maxsz, static_cast<int>(pc.sets.size()));
  out.t = maxsz;

  std::vector<int> a_slot_of(tb.classes.size(), 0);  // class index -> A slot
  for (int p = 1; p <= out.k; ++p) a_slot_of[a_seq[p - 1]] = p;
  out.sigma.resize(out.k);
  for (int p = 1; p <= out.k; ++p) out.sigma[p - 1] = a_slot_of[b_seq[p - 1]];

  std::vector<detail::ClassPlacement> placed(tb.classes.size());
  out.sigma_j.assign(out.k, {});
  out.real_size.assign(out.k, 0);
  out.class_labels.assign(out.k, "");
  std::vector<int> a_rank_of(tb.sets.size(), 0);
  std::vector<int> b_rank_of(tb.sets.size(), 0);
  for (size_t c = 0; c < tb.classes.size(); ++c) {
    auto& pl = placed[c];
    pl.cls = static_cast<int>(c);
    pl.a_order = detail::sorted_sets(tb, tb.classes[c].sets, true);
    pl.b_order = detail::sorted_sets(tb, tb.classes[c].sets, false);
    for (size_t r = 0; r < pl.a_order.size(); ++r)
      a_rank_of[pl.a_order[r]] = static_cast<int>(r) + 1;
    for (size_t r = 0; r < pl.b_order.size(); ++r)
      b_rank_of[pl.b_order[r]] = static_cast<int>(r) + 1;
    const int slot = a_slot_of[c];
    const int sz = static_cast<int>(pl.a_order.size());
    out.real_size[slot - 1] = sz;
    out.class_labels[slot - 1] = tb.classes[c].label;
    auto& perm = out.sigma_j[slot - 1];
    perm.assign(out.t, 0);
    for (int r = 1; r <= sz; ++r) perm[r - 1] = a_rank_of[pl.b_order[r - 1]];
    for (int r = sz + 1; r <= out.t; ++r) perm[r - 1] = r;
  }

  // One flat position per (slot, rank); contiguity of each element's tracks
  // is the structural invariant the forcing argument rests on.
  auto flat_a = [&](int set) {
    const int slot = a_slot_of[tb.sets[set].cls];
    return (slot - 1) * out.t + a_rank_of[set];
  };
  std::vector<int> b_slot_of(tb.classes.size(), 0);
  for (int p = 1; p <= out.k; ++p) b_slot_of[b_seq[p - 1]] = p;
  auto flat_b = [&](int set) {
    const int slot = b_slot_of[tb.sets[set].cls];
    return (slot - 1) * out.t + b_rank_of[set];
  };
  auto real_at_a = [&](int flat) {
    const int slot = (flat - 1) / out.t + 1;
    const int rank = (flat - 1) % out.t + 1;
    return rank <= out.real_size[slot - 1] ? placed[a_seq[slot - 1]].a_order[rank - 1] : -1;
  };
  auto real_at_b = [&](int flat) {
    const int slot = (flat - 1) / out.t + 1;
    const int rank = (flat - 1) % out.t + 1;
    const int cls = b_seq[slot - 1];
    return rank <= static_cast<int>(placed[cls].b_order.size()) ? placed[cls].b_order[rank - 1]
                                                                : -1;
  };

  auto make_interval = [&](const std::vector<int>& members, bool on_a,
                           const std::string& label) {
    TrackInterval iv;
    iv.label = label;
    if (members.empty()) return iv;
    int lo = 0, hi = 0;
    for (int s : members) {
      const int f = on_a ? flat_a(s) : flat_b(s);
      if (lo == 0 || f < lo) lo = f;
      if (f > hi) hi = f;
    }
    for (int f = lo; f <= hi; ++f) {
      const int s = on_a ? real_at_a(f) : real_at_b(f);
      if (s < 0) continue;
      if (std::find(members.begin(), members.end(), s) == members.end())
        throw InvalidInstance("element footprint is not contiguous: " + label);
    }
    iv.j_lo = (lo - 1) / out.t + 1;
    iv.i_lo = (lo - 1) % out.t + 1;
    iv.j_hi = (hi - 1) / out.t + 1;
    iv.i_hi = (hi - 1) % out.t + 1;
    return iv;
  };

  for (int pos = 1; pos <= tb.size_a; ++pos) {
    std::vector<int> members;
    for (size_t s = 0; s < tb.sets.size(); ++s)
      if (tb.sets[s].covers_a(pos)) members.push_back(static_cast<int>(s));
    out.s_a.push_back(make_interval(
        members, true, pos <= static_cast<int>(tb.a_labels.size()) ? tb.a_labels[pos - 1] : ""));
  }
  for (int pos = 1; pos <= tb.size_b; ++pos) {
    std::vector<int> members;
    for (size_t s = 0; s < tb.sets.size(); ++s)
      if (tb.sets[s].covers_b(pos)) members.push_back(static_cast<int>(s));
    out.s_b.push_back(make_interval(
        members, false, pos <= static_cast<int>(tb.b_labels.size()) ? tb.b_labels[pos - 1] : ""));
  }
  out.validate();
  return out;
}

}  // namespace gallery
