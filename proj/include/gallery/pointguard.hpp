#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallery/coverage.hpp"
#include "gallery/errors.hpp"
#include "gallery/geometry.hpp"
#include "gallery/polygon.hpp"
#include "gallery/rational.hpp"
#include "gallery/sths.hpp"
#include "gallery/visibility.hpp"

namespace gallery {

// Spacing constants for the point-guard hall. The chain
// s < y < x < D < L < F keeps unrelated gadget families angularly
// separated from every pocket apex.
struct LengthParams {
  Rational s, y, x, D, L, Lp, F;
  Rational x1, y1;
};

inline LengthParams choose_lengths(const STHSInstance& inst) {
  inst.validate();
  LengthParams p;
  p.s = 1;
  long floor_y = 2L * inst.k * inst.t;
  long pockets = static_cast<long>(inst.s_a.size() + inst.s_b.size());
  p.y = Rational(std::max({floor_y, pockets, 64L}));
  p.x = p.y * (4 * inst.k * inst.t);
  p.D = p.x * (128 * inst.t);
  p.L = p.D * (4 * inst.k);
  p.Lp = p.L * 2;
  p.F = p.y * p.D * inst.k;
  p.x1 = 0;
  p.y1 = 0;
  return p;
}

inline void assert_separations(const LengthParams& p, const STHSInstance& inst) {
  auto need = [](bool ok, const char* msg) {
    if (!ok) throw GeometryDegenerate(std::string("length separation violated: ") + msg);
  };
  need(p.s < p.y, "s < y");
  need(p.y < p.x, "y < x");
  need(p.x < p.D, "x < D");
  need(p.D < p.L, "D < L");
  need(p.x < p.L && p.L < p.F, "x < L < F");
  Rational pockets(static_cast<long>(inst.s_a.size() + inst.s_b.size()));
  need(p.F * p.y / (p.D * inst.k) > 2 * pockets * p.s, "track wall has room for all pockets");
  need(p.D > 96 * inst.t * p.x, "linker clusters fit between class blocks");
  Rational tall = inst.k * p.D + 10 * p.L + 2 * Rational(inst.k * inst.t - 1) * p.y;
  need(p.F > tall, "hall is much wider than tall");
}

enum class PgPocketKind { TrackA, TrackB, Slit, BarCone, LinkerLeft, LinkerRight };

// fam for linker pockets: 0 pairs the base row with the beta row, 1 pairs the
// base row with the bar row, 2 pairs the beta row with the bar row.
struct PgPocketId {
  PgPocketKind kind = PgPocketKind::TrackA;
  int fam = 0;
  int j = 0;
  int i = 0;

  friend bool operator<(const PgPocketId& a, const PgPocketId& b) {
    return std::tie(a.kind, a.fam, a.j, a.i) < std::tie(b.kind, b.fam, b.j, b.i);
  }
  friend bool operator==(const PgPocketId& a, const PgPocketId& b) {
    return std::tie(a.kind, a.fam, a.j, a.i) == std::tie(b.kind, b.fam, b.j, b.i);
  }
};

inline std::string to_string(const PgPocketId& id) {
  static const char* names[] = {"trackA", "trackB", "slit", "barcone", "linkL", "linkR"};
  std::string out = names[static_cast<int>(id.kind)];
  out += "[" + std::to_string(id.fam) + ";" + std::to_string(id.j) + ";" +
         std::to_string(id.i) + "]";
  return out;
}

// fam: 0 = base candidate, 1 = bar candidate, 2 = beta candidate.
struct PgCandidateId {
  int fam = 0;
  int j = 0;
  int i = 0;

  friend bool operator<(const PgCandidateId& a, const PgCandidateId& b) {
    return std::tie(a.fam, a.j, a.i) < std::tie(b.fam, b.j, b.i);
  }
  friend bool operator==(const PgCandidateId& a, const PgCandidateId& b) {
    return std::tie(a.fam, a.j, a.i) == std::tie(b.fam, b.j, b.i);
  }
};

struct PgPocket {
  PgPocketId id;
  int root = -1;                  // vertex index of the deep point
  std::vector<int> verts;         // boundary-order vertex indices of the pocket
  std::vector<PgCandidateId> expected;
};

struct PointGuardInstance {
  SimplePolygon polygon;
  STHSInstance source;
  LengthParams lengths;
  int k = 0, t = 0, budget = 0;
  std::vector<PgPocket> pockets;
  std::map<PgPocketId, int> pocket_index;
  std::vector<int> track_a, track_b;  // interval index -> entry in pockets
  std::map<std::pair<int, int>, std::array<Point, 3>> candidates;

  const Point& candidate_point(const PgCandidateId& c) const {
    return candidates.at({c.j, c.i})[c.fam];
  }
  const PgPocket& pocket(const PgPocketId& id) const {
    auto it = pocket_index.find(id);
    if (it == pocket_index.end()) throw UnknownPocket("no pocket " + to_string(id));
    return pockets[it->second];
  }
  Point root_point(const PgPocketId& id) const { return polygon.vertex(pocket(id).root); }
};

namespace detail {

inline Point pg_rot90(const Point& v) { return Point{-v.y, v.x}; }

inline bool pg_ang_less(const Point& apex, const Point& a, const Point& b) {
  return cross(a - apex, b - apex) > 0;
}

struct PgPending {
  PgPocketId id;
  Point apex;
  Point cut_lo, cut_hi;  // apex rays through these bound the admitted cone
  std::vector<PgCandidateId> expected;
  std::vector<PgCandidateId> skip_assert;
};

struct PgBuilder {
  const STHSInstance& inst;
  LengthParams p;
  int k, t;
  Rational Hc, Hs, XT, XL, Yglob, Yb0, Ybtop, Yab;

  std::vector<std::vector<Point>> alpha, abar, beta;  // [j-1][i-1]
  std::vector<Point> lad_a, lad_b;                    // flat track positions
  std::vector<PgPending> wall_pockets, ceil_pockets;

  PointGuardInstance out;

  explicit PgBuilder(const STHSInstance& s) : inst(s), p(choose_lengths(s)) {
    k = inst.k;
    t = inst.t;
  }

  static void need(bool ok, const std::string& msg) {
    if (!ok) throw GeometryDegenerate("point-guard build: " + msg);
  }

  Rational class_x(int j) const { return p.x1 + (j - 1) * p.D; }
  Rational class_y(int j) const { return p.y1 + Rational((j - 1) * t) * p.y; }
  Rational bar_x(int j) const { return class_x(j) + (t - 1) * p.x + p.D / 2; }

  // height of the slit line of class j at abscissa q
  Rational slit_line_y(int j, const Rational& q) const {
    return class_y(j) + (q - class_x(j)) * p.y / p.x;
  }

  void place_candidates() {
    alpha.assign(k, {});
    abar.assign(k, {});
    beta.assign(k, {});
    Yb0 = p.y1 + Rational(k * t - 1) * p.y + p.L;
    Ybtop = Yb0 + Rational(k * t - 1) * p.y;
    Yab = Ybtop + p.L;
    lad_a.assign(static_cast<std::size_t>(k) * t, Point{});
    lad_b.assign(static_cast<std::size_t>(k) * t, Point{});
    for (int j = 1; j <= k; ++j) {
      int slot = inst.b_slot_of_class(j);
      for (int i = 1; i <= t; ++i) {
        Point a{class_x(j) + (i - 1) * p.x, class_y(j) + (i - 1) * p.y};
        int bpos = (slot - 1) * t + inst.b_rank_of(j, i);
        Point b{class_x(j) + (i - 1) * p.x, Yb0 + Rational(bpos - 1) * p.y};
        Point ab{bar_x(j) + (i - 1) * p.x, Yab};
        alpha[j - 1].push_back(a);
        abar[j - 1].push_back(ab);
        beta[j - 1].push_back(b);
        lad_a[static_cast<std::size_t>(j - 1) * t + (i - 1)] = a;
        lad_b[static_cast<std::size_t>(bpos - 1)] = b;
      }
    }
    // a low ceiling keeps every ceiling cone local to its class block
    Hc = Yab + 8 * p.L;
    Hs = 2 * (k + 2) * p.D;
    XT = class_x(k) + (t - 1) * p.x + p.F;
    XL = p.x1 - p.D;
    Yglob = slit_line_y(k, XL - Hs) - p.y / 2 - 2 * p.y;
  }

  std::vector<PgCandidateId> all_candidate_ids() const {
    std::vector<PgCandidateId> ids;
    for (int fam = 0; fam < 3; ++fam)
      for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= t; ++i) ids.push_back({fam, j, i});
    return ids;
  }

  const Point& cand_pt(const PgCandidateId& c) const {
    const auto& fam = c.fam == 0 ? alpha : (c.fam == 1 ? abar : beta);
    return fam[c.j - 1][c.i - 1];
  }

  Point nudge(const Point& apex, const Point& pt, bool ccw) const {
    Point v = pt - apex;
    Rational scale = p.s / (4 * (rat_abs(v.x) + rat_abs(v.y)));
    Point r = pg_rot90(v);
    Point off{r.x * scale, r.y * scale};
    if (!ccw) off = Point{-off.x, -off.y};
    return pt + off;
  }

  static Point midpoint(const Point& a, const Point& b) {
    return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
  }

  // Targets for an apex cone admitting exactly `inc`. All points must lie in
  // an open half-plane around the apex; cuts fall between the included
  // extremes and the nearest excluded neighbour.
  std::pair<Point, Point> make_cone(const Point& apex, std::vector<Point> inc,
                                    const std::vector<Point>& exc,
                                    const std::string& ctx) const {
    need(!inc.empty(), "cone needs at least one admitted point");
    std::sort(inc.begin(), inc.end(), [&](const Point& a, const Point& b) {
      return pg_ang_less(apex, a, b);
    });
    const Point& first = inc.front();
    const Point& last = inc.back();
    const Point* lo_nb = nullptr;
    const Point* hi_nb = nullptr;
    for (const Point& e : exc) {
      if (pg_ang_less(apex, e, first)) {
        if (!lo_nb || pg_ang_less(apex, *lo_nb, e)) lo_nb = &e;
      } else if (pg_ang_less(apex, last, e)) {
        if (!hi_nb || pg_ang_less(apex, e, *hi_nb)) hi_nb = &e;
      } else {
        throw GeometryDegenerate("point-guard build: excluded point " + format_point(e) +
                                 " inside the span of " + ctx);
      }
    }
    Point lo = lo_nb ? midpoint(*lo_nb, first) : nudge(apex, first, false);
    Point hi = hi_nb ? midpoint(last, *hi_nb) : nudge(apex, last, true);
    return {lo, hi};
  }

  bool in_cone(const Point& apex, const Point& lo, const Point& hi, const Point& q) const {
    return pg_ang_less(apex, lo, q) && pg_ang_less(apex, q, hi);
  }

  void add_track_pockets() {
    auto add = [&](bool track_a_side, int q, const TrackInterval& iv) {
      PgPending pk;
      pk.id = {track_a_side ? PgPocketKind::TrackA : PgPocketKind::TrackB, 0, 0, q};
      Rational base = track_a_side ? p.y1 : Yb0;
      pk.apex = Point{XT + Rational(1, 4), base + (q - 1) * p.s};
      const std::vector<Point>& lad = track_a_side ? lad_a : lad_b;
      if (iv.empty()) {
        // unhittable sentinel: aim the cone at candidate-free space
        Point t1, t2;
        if (track_a_side) {
          t1 = Point{p.x1 + p.x, p.y1 - 2 * p.y};
          t2 = Point{p.x1 + 2 * p.x, p.y1 - 3 * p.y};
        } else {
          t1 = Point{p.x1 + p.x, Ybtop + p.L / 2};
          t2 = Point{p.x1 + 2 * p.x, Ybtop + p.L / 2 + p.y};
        }
        if (pg_ang_less(pk.apex, t2, t1)) std::swap(t1, t2);
        pk.cut_lo = t1;
        pk.cut_hi = t2;
      } else {
        int lo = (iv.j_lo - 1) * t + iv.i_lo;
        int hi = (iv.j_hi - 1) * t + iv.i_hi;
        std::vector<Point> inc(lad.begin() + (lo - 1), lad.begin() + hi);
        std::vector<Point> exc;
        for (const PgCandidateId& c : all_candidate_ids()) {
          int want = track_a_side ? 0 : 2;
          if (c.fam == want) {
            int pos = track_a_side
                          ? (c.j - 1) * t + c.i
                          : (inst.b_slot_of_class(c.j) - 1) * t + inst.b_rank_of(c.j, c.i);
            if (pos >= lo && pos <= hi) {
              pk.expected.push_back(c);
              continue;
            }
          }
          exc.push_back(cand_pt(c));
        }
        std::sort(pk.expected.begin(), pk.expected.end());
        auto cuts = make_cone(pk.apex, inc, exc, to_string(pk.id));
        pk.cut_lo = cuts.first;
        pk.cut_hi = cuts.second;
      }
      wall_pockets.push_back(std::move(pk));
    };
    for (std::size_t q = 0; q < inst.s_a.size(); ++q)
      add(true, static_cast<int>(q + 1), inst.s_a[q]);
    for (std::size_t q = 0; q < inst.s_b.size(); ++q)
      add(false, static_cast<int>(q + 1), inst.s_b[q]);
  }

  void add_bar_cones() {
    for (int j = 1; j <= k; ++j) {
      PgPending pk;
      pk.id = {PgPocketKind::BarCone, 0, j, 0};
      pk.apex = Point{bar_x(j) + Rational(t - 1) * p.x / 2, Hc + Rational(1, 4)};
      std::vector<Point> inc;
      std::vector<Point> exc;
      for (const PgCandidateId& c : all_candidate_ids()) {
        if (c.fam == 1 && c.j == j) {
          inc.push_back(cand_pt(c));
          pk.expected.push_back(c);
        } else {
          exc.push_back(cand_pt(c));
        }
      }
      auto cuts = make_cone(pk.apex, inc, exc, to_string(pk.id));
      pk.cut_lo = cuts.first;
      pk.cut_hi = cuts.second;
      ceil_pockets.push_back(std::move(pk));
    }
  }

  void add_linker_pockets() {
    for (int j = 1; j <= k; ++j) {
      for (int fam = 0; fam < 3; ++fam) {
        int rfam = fam == 2 ? 2 : 0;          // row that anchors prefixes on the right
        int sfam = fam == 0 ? 2 : 1;          // row that anchors prefixes on the left
        // Left cluster: a nearby apex sees the rows ordered base, beta, bar.
        // Right cluster: rows sharing columns swap on their own; the offset
        // bar row only falls behind once the apex is far enough that its
        // smaller depth beats the extra distance, so the bar families anchor
        // at calibrated multiples of the class period.
        Rational gc = Rational((10 + 4 * fam) * t + 2) * p.x;
        Rational gd = Rational(10 * t + 2) * p.x;
        if (fam == 1) gd = 2 * p.D + Rational(16 * t) * p.x;
        if (fam == 2) gd = 4 * p.D + Rational(48 * t) * p.x;
        Rational cx = class_x(j) - gc;
        Rational dx = bar_x(j) + Rational(t - 1) * p.x + gd;
        for (int i = 1; i <= t; ++i) {
          // left pocket i<t admits R suffix i+1.. plus S prefix ..i; i==t all of S
          PgPending c;
          c.id = {PgPocketKind::LinkerLeft, fam, j, i};
          c.apex = Point{cx - (i - 1) * p.x, Hc + Rational(1, 4)};
          if (i < t) {
            for (int a = i + 1; a <= t; ++a) c.expected.push_back({rfam, j, a});
            for (int a = 1; a <= i; ++a) c.expected.push_back({sfam, j, a});
          } else {
            for (int a = 1; a <= t; ++a) c.expected.push_back({sfam, j, a});
          }
          finish_linker(c, fam, j);
          ceil_pockets.push_back(std::move(c));

          // right pocket i<t admits R prefix ..i plus S suffix i+1..; i==t all of R
          PgPending d;
          d.id = {PgPocketKind::LinkerRight, fam, j, i};
          d.apex = Point{dx + (i - 1) * p.x, Hc + Rational(1, 4)};
          if (i < t) {
            for (int a = 1; a <= i; ++a) d.expected.push_back({rfam, j, a});
            for (int a = i + 1; a <= t; ++a) d.expected.push_back({sfam, j, a});
          } else {
            for (int a = 1; a <= t; ++a) d.expected.push_back({rfam, j, a});
          }
          finish_linker(d, fam, j);
          ceil_pockets.push_back(std::move(d));
        }
      }
    }
  }

  void finish_linker(PgPending& pk, int fam, int j) {
    std::sort(pk.expected.begin(), pk.expected.end());
    std::vector<Point> inc;
    std::vector<Point> exc;
    for (const PgCandidateId& c : all_candidate_ids()) {
      bool is_exp = std::binary_search(pk.expected.begin(), pk.expected.end(), c);
      if (is_exp) {
        inc.push_back(cand_pt(c));
        continue;
      }
      // beta points of the same class sit angularly inside every base/bar
      // pocket span; they are tolerated there and skipped by the checks
      if (fam == 1 && c.fam == 2 && c.j == j) {
        pk.skip_assert.push_back(c);
        continue;
      }
      exc.push_back(cand_pt(c));
    }
    auto cuts = make_cone(pk.apex, inc, exc, to_string(pk.id));
    pk.cut_lo = cuts.first;
    pk.cut_hi = cuts.second;
  }

  void check_cones() const {
    auto check = [&](const PgPending& pk) {
      for (const PgCandidateId& c : all_candidate_ids()) {
        if (std::find(pk.skip_assert.begin(), pk.skip_assert.end(), c) != pk.skip_assert.end())
          continue;
        bool want = std::binary_search(pk.expected.begin(), pk.expected.end(), c);
        bool got = in_cone(pk.apex, pk.cut_lo, pk.cut_hi, cand_pt(c));
        need(want == got, "cone of " + to_string(pk.id) + " misclassifies a candidate");
      }
    };
    for (const auto& pk : wall_pockets) check(pk);
    for (const auto& pk : ceil_pockets) check(pk);
  }

  void check_slit_cone(int j, const Point& tip, const Point& mouth_top,
                       const Point& mouth_bot) const {
    Point dtop = mouth_top - tip;
    Point dbot = mouth_bot - tip;
    for (const PgCandidateId& c : all_candidate_ids()) {
      Point v = cand_pt(c) - tip;
      bool online = cross(dtop, v) == 0 && dot(dtop, v) > 0;
      if (c.fam == 0 && c.j == j) {
        need(online, "slit line of class " + std::to_string(j) + " misses a base candidate");
      } else {
        bool inside = cross(dtop, v) <= 0 && cross(dbot, v) >= 0 && dot(dtop, v) > 0;
        need(!inside, "slit cone of class " + std::to_string(j) + " admits a stranger");
      }
    }
  }

  Point wall_hit(const Point& apex, const Point& target, bool vertical,
                 const Rational& coord) const {
    Point w1 = vertical ? Point{coord, Rational(0)} : Point{Rational(0), coord};
    Point w2 = vertical ? Point{coord, Rational(1)} : Point{Rational(1), coord};
    try {
      return line_intersect(apex, target, w1, w2);
    } catch (const ParallelLines&) {
      throw GeometryDegenerate("point-guard build: support ray parallel to wall");
    }
  }

  PointGuardInstance build() {
    assert_separations(p, inst);
    place_candidates();
    add_track_pockets();
    add_bar_cones();
    add_linker_pockets();
    check_cones();

    std::sort(wall_pockets.begin(), wall_pockets.end(),
              [](const PgPending& a, const PgPending& b) { return a.apex.y < b.apex.y; });
    std::sort(ceil_pockets.begin(), ceil_pockets.end(),
              [](const PgPending& a, const PgPending& b) { return b.apex.x < a.apex.x; });

    std::vector<Point> verts;
    auto push = [&](const Point& pt) {
      verts.push_back(pt);
      return static_cast<int>(verts.size()) - 1;
    };
    auto record = [&](const PgPocketId& id, int root, std::vector<int> vs,
                      std::vector<PgCandidateId> exp) {
      PgPocket pk;
      pk.id = id;
      pk.root = root;
      pk.verts = std::move(vs);
      pk.expected = std::move(exp);
      out.pocket_index[id] = static_cast<int>(out.pockets.size());
      out.pockets.push_back(std::move(pk));
    };

    push(Point{XL, Yglob});
    push(Point{XT, Yglob});

    Rational wall_y = Yglob;
    for (auto& pk : wall_pockets) {
      Point m1 = wall_hit(pk.apex, pk.cut_lo, true, XT);
      Point m2 = wall_hit(pk.apex, pk.cut_hi, true, XT);
      if (m2.y < m1.y) std::swap(m1, m2);
      need(m1.y < m2.y, "wall pocket mouth is degenerate");
      need(rat_abs(m1.y - pk.apex.y) < p.s / 4 && rat_abs(m2.y - pk.apex.y) < p.s / 4,
           "wall pocket mouth drifted out of its band");
      need(m1.y > wall_y, "wall pockets out of order");
      int vlo = push(m1);
      int root = push(pk.apex);
      int vhi = push(m2);
      wall_y = m2.y;
      record(pk.id, root, {vlo, root, vhi}, std::move(pk.expected));
    }
    need(wall_y < Hc, "wall pockets exceed the ceiling");
    push(Point{XT, Hc});

    Rational ceil_x = XT;
    for (auto& pk : ceil_pockets) {
      Point m1 = wall_hit(pk.apex, pk.cut_lo, false, Hc);
      Point m2 = wall_hit(pk.apex, pk.cut_hi, false, Hc);
      if (m2.x > m1.x) std::swap(m1, m2);  // emit right mouth first
      need(m2.x < m1.x, "ceiling pocket mouth is degenerate");
      need(rat_abs(m1.x - pk.apex.x) < p.x / 4 && rat_abs(m2.x - pk.apex.x) < p.x / 4,
           "ceiling pocket mouth drifted out of its band");
      need(m1.x < ceil_x, "ceiling pockets out of order");
      int vr = push(m1);
      int root = push(pk.apex);
      int vl = push(m2);
      ceil_x = m2.x;
      record(pk.id, root, {vr, root, vl}, std::move(pk.expected));
    }
    need(ceil_x > XL, "ceiling pockets exceed the left wall");
    push(Point{XL, Hc});

    Rational left_y = Hc;
    for (int j = 1; j <= k; ++j) {
      Point mouth_top{XL, slit_line_y(j, XL)};
      Point tip_top{XL - Hs, slit_line_y(j, XL - Hs)};
      Point tip_bot = tip_top - Point{Rational(0), p.y / 2};
      Point mouth_bot = mouth_top - Point{Rational(0), p.y / 2};
      check_slit_cone(j, tip_top, mouth_top, mouth_bot);
      need(mouth_top.y < left_y, "slits out of order");
      int mt = push(mouth_top);
      int root = push(tip_top);
      int tb = push(tip_bot);
      int mb = push(mouth_bot);
      left_y = mouth_bot.y;
      std::vector<PgCandidateId> exp;
      for (int i = 1; i <= t; ++i) exp.push_back({0, j, i});
      record({PgPocketKind::Slit, 0, j, 0}, root, {mt, root, tb, mb}, std::move(exp));
    }
    need(left_y > Yglob, "slits reach below the floor");

    out.polygon.v = std::move(verts);
    require_simple(out.polygon);

    out.source = inst;
    out.lengths = p;
    out.k = k;
    out.t = t;
    out.budget = 3 * k;
    out.track_a.clear();
    out.track_b.clear();
    for (std::size_t q = 0; q < inst.s_a.size(); ++q)
      out.track_a.push_back(out.pocket_index.at(
          {PgPocketKind::TrackA, 0, 0, static_cast<int>(q + 1)}));
    for (std::size_t q = 0; q < inst.s_b.size(); ++q)
      out.track_b.push_back(out.pocket_index.at(
          {PgPocketKind::TrackB, 0, 0, static_cast<int>(q + 1)}));
    for (int j = 1; j <= k; ++j)
      for (int i = 1; i <= t; ++i)
        out.candidates[{j, i}] = {alpha[j - 1][i - 1], abar[j - 1][i - 1],
                                  beta[j - 1][i - 1]};

    for (const auto& [key, pts] : out.candidates)
      for (const Point& pt : pts)
        need(point_in(out.polygon, pt) == Side::Inside, "candidate outside the hall");

    long bound = 32L * (static_cast<long>(k) * t + static_cast<long>(inst.s_a.size()) +
                        static_cast<long>(inst.s_b.size()));
    need(static_cast<long>(out.polygon.size()) <= bound, "vertex budget exceeded");
    return std::move(out);
  }
};

}  // namespace detail

inline PointGuardInstance build_pointguard(const STHSInstance& inst) {
  return detail::PgBuilder(inst).build();
}

// Families whose members are tested against a pocket root. Linker pockets are
// checked against their two designated rows of the owning class; slits and bar
// cones against every candidate.
inline std::vector<PgCandidateId> pg_designated(const PointGuardInstance& pg,
                                                const PgPocketId& id) {
  std::vector<PgCandidateId> ids;
  auto add_fam = [&](int fam, int only_j) {
    for (int j = 1; j <= pg.k; ++j) {
      if (only_j != 0 && j != only_j) continue;
      for (int i = 1; i <= pg.t; ++i) ids.push_back({fam, j, i});
    }
  };
  switch (id.kind) {
    case PgPocketKind::TrackA: add_fam(0, 0); break;
    case PgPocketKind::TrackB: add_fam(2, 0); break;
    case PgPocketKind::Slit:
    case PgPocketKind::BarCone:
      add_fam(0, 0);
      add_fam(1, 0);
      add_fam(2, 0);
      break;
    case PgPocketKind::LinkerLeft:
    case PgPocketKind::LinkerRight:
      if (id.fam == 0) {
        add_fam(0, id.j);
        add_fam(2, id.j);
      } else if (id.fam == 1) {
        add_fam(0, id.j);
        add_fam(1, id.j);
      } else {
        add_fam(2, id.j);
        add_fam(1, id.j);
      }
      break;
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::vector<PgCandidateId> pocket_signature(const PointGuardInstance& pg,
                                                   const PgPocketId& id) {
  Point root = pg.root_point(id);
  std::vector<PgCandidateId> sig;
  for (const PgCandidateId& c : pg_designated(pg, id))
    if (sees(pg.polygon, pg.candidate_point(c), root)) sig.push_back(c);
  return sig;
}

inline SimplePolygon pg_pocket_region(const PointGuardInstance& pg, const PgPocketId& id) {
  const PgPocket& pk = pg.pocket(id);
  SimplePolygon r;
  for (int v : pk.verts) r.v.push_back(pg.polygon.vertex(v));
  return r;
}

inline std::vector<Point> structured_guards(const PointGuardInstance& pg,
                                            const std::vector<int>& choice) {
  if (static_cast<int>(choice.size()) != pg.k)
    throw InvalidInstance("choice size must equal the class count");
  std::vector<Point> guards;
  for (int j = 1; j <= pg.k; ++j) {
    int c = choice[j - 1];
    if (c < 1 || c > pg.t) throw InvalidInstance("choice entry out of range");
    const auto& triple = pg.candidates.at({j, c});
    guards.push_back(triple[0]);
    guards.push_back(triple[1]);
    guards.push_back(triple[2]);
  }
  return guards;
}

// Searches candidate triples lexicographically. Any interior guard sees the
// whole convex hall, so covering the polygon is equivalent to every pocket
// root being seen; roots are pre-tested against all candidates once.
inline std::optional<std::vector<int>> solve_pg_structured(
    const PointGuardInstance& pg, std::int64_t max_enum = 100000) {
  double total = 1;
  for (int j = 0; j < pg.k; ++j) total *= pg.t;
  if (total > static_cast<double>(max_enum))
    throw TooLarge("structured search space exceeds limit");

  std::size_t np = pg.pockets.size();
  std::size_t words = (np + 63) / 64;
  auto seen_mask = [&](const Point& g) {
    std::vector<std::uint64_t> m(words, 0);
    for (std::size_t pi = 0; pi < np; ++pi) {
      Point root = pg.polygon.vertex(pg.pockets[pi].root);
      if (sees(pg.polygon, g, root)) m[pi / 64] |= 1ULL << (pi % 64);
    }
    return m;
  };
  // mask per class and per-class choice: union over the triple
  std::vector<std::vector<std::vector<std::uint64_t>>> mask(
      pg.k, std::vector<std::vector<std::uint64_t>>(pg.t));
  for (int j = 1; j <= pg.k; ++j)
    for (int c = 1; c <= pg.t; ++c) {
      const auto& triple = pg.candidates.at({j, c});
      std::vector<std::uint64_t> m(words, 0);
      for (const Point& g : triple) {
        auto gm = seen_mask(g);
        for (std::size_t w = 0; w < words; ++w) m[w] |= gm[w];
      }
      mask[j - 1][c - 1] = std::move(m);
    }

  std::vector<int> choice(pg.k, 1);
  std::vector<std::vector<std::uint64_t>> prefix(pg.k + 1,
                                                 std::vector<std::uint64_t>(words, 0));
  auto full = [&](const std::vector<std::uint64_t>& m) {
    for (std::size_t pi = 0; pi < np; ++pi)
      if (!(m[pi / 64] >> (pi % 64) & 1)) return false;
    return true;
  };
  int depth = 0;
  while (true) {
    if (depth == pg.k) {
      if (full(prefix[pg.k])) return choice;
      --depth;
      while (depth >= 0 && choice[depth] == pg.t) --depth;
      if (depth < 0) return std::nullopt;
      ++choice[depth];
    } else {
      for (std::size_t w = 0; w < words; ++w)
        prefix[depth + 1][w] = prefix[depth][w] | mask[depth][choice[depth] - 1][w];
      for (int d = depth + 1; d < pg.k; ++d) choice[d] = 1;
      ++depth;
    }
  }
}

}  // namespace gallery
