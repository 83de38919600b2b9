#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gallery/visibility.hpp"

namespace gallery {

struct CoverReport {
  bool covered = false;
  std::optional<Point> witness;  // an unseen interior point when !covered
};

namespace detail {

struct Bbox {
  Rational xlo, xhi, ylo, yhi;
};

inline Bbox bbox_of(const SimplePolygon& poly) {
  Bbox b{poly.v[0].x, poly.v[0].x, poly.v[0].y, poly.v[0].y};
  for (const auto& p : poly.v) {
    b.xlo = rat_min(b.xlo, p.x);
    b.xhi = rat_max(b.xhi, p.x);
    b.ylo = rat_min(b.ylo, p.y);
    b.yhi = rat_max(b.yhi, p.y);
  }
  return b;
}

inline bool seg_touches_bbox(const Point& a, const Point& b, const Bbox& bb) {
  if (rat_max(a.x, b.x) < bb.xlo || rat_min(a.x, b.x) > bb.xhi) return false;
  if (rat_max(a.y, b.y) < bb.ylo || rat_min(a.y, b.y) > bb.yhi) return false;
  return true;
}

}  // namespace detail

// Exact coverage of region by the union of guard visibility regions inside
// poly. region must be contained in poly. The arrangement of boundary edges,
// region edges and visibility window segments is cut into vertical slabs;
// one interior sample per slab face decides that face (coverage status is
// constant on faces, and any uncovered set has positive area, so a miss is
// always caught). A candidate witness is confirmed with sees() before being
// reported, keeping verdicts independent of point-location on the
// (possibly degenerate) visibility polygons.
inline CoverReport covers_region(const SimplePolygon& poly, const SimplePolygon& region,
                                 const std::vector<Point>& guards,
                                 const std::vector<VisPolygon>* pre = nullptr) {
  for (const auto& g : guards)
    if (point_in(poly, g) == Side::Outside) throw PointOutside("guard " + format_point(g));
  std::vector<VisPolygon> own;
  const std::vector<VisPolygon>* vis = pre;
  if (!vis) {
    own.reserve(guards.size());
    for (const auto& g : guards) own.push_back(visibility_polygon_ex(poly, g));
    vis = &own;
  }
  const detail::Bbox bb = detail::bbox_of(region);
  std::vector<std::pair<Point, Point>> segs;
  const auto add = [&](const Point& a, const Point& b) {
    if (a == b) return;
    if (!detail::seg_touches_bbox(a, b, bb)) return;
    segs.emplace_back(a, b);
  };
  for (std::size_t i = 0; i < region.size(); ++i) {
    const auto [a, b] = region.edge(i);
    add(a, b);
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto [a, b] = poly.edge(i);
    add(a, b);
  }
  for (const auto& vp : *vis)
    for (std::size_t i = 0; i < vp.poly.size(); ++i)
      if (vp.window[i]) {
        const auto [a, b] = vp.poly.edge(i);
        add(a, b);
      }

  std::vector<Rational> xs;
  for (const auto& [a, b] : segs) {
    xs.push_back(a.x);
    xs.push_back(b.x);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Point d = segs[i].second - segs[i].first;
      for (auto& t : segment_hit_params(segs[i].first, segs[i].second, segs[j].first,
                                        segs[j].second))
        xs.push_back(segs[i].first.x + t * d.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  while (!xs.empty() && xs.front() < bb.xlo) xs.erase(xs.begin());
  while (!xs.empty() && xs.back() > bb.xhi) xs.pop_back();

  std::vector<Rational> ys;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const Rational xm = (xs[s] + xs[s + 1]) / 2;
    ys.clear();
    for (const auto& [a, b] : segs) {
      if (!((a.x < xm && xm < b.x) || (b.x < xm && xm < a.x))) continue;
      ys.push_back(a.y + (xm - a.x) * (b.y - a.y) / (b.x - a.x));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (std::size_t g = 0; g + 1 < ys.size(); ++g) {
      const Point sample{xm, (ys[g] + ys[g + 1]) / 2};
      if (point_in(region, sample) != Side::Inside) continue;
      bool cov = false;
      for (const auto& vp : *vis)
        if (point_in(vp.poly, sample) != Side::Outside) {
          cov = true;
          break;
        }
      if (!cov)
        for (const auto& gd : guards)
          if (sees(poly, gd, sample)) {
            cov = true;
            break;
          }
      if (!cov) return {false, sample};
    }
  }
  return {true, std::nullopt};
}

inline CoverReport covers(const SimplePolygon& poly, const std::vector<Point>& guards,
                          const std::vector<VisPolygon>* pre = nullptr) {
  return covers_region(poly, poly, guards, pre);
}

// Fast witness finder: scans the boundary for an edge parameter gap not
// covered by any guard's visible intervals, confirming candidates with
// sees(). Returns nothing when the boundary looks covered (interior holes
// are possible, so a full covers() call must still decide positively).
inline std::optional<Point> boundary_cover_gap(const SimplePolygon& poly,
                                               const std::vector<Point>& guards) {
  std::vector<LocalCone> cones;
  cones.reserve(guards.size());
  for (const auto& g : guards) {
    if (point_in(poly, g) == Side::Outside) throw PointOutside("guard " + format_point(g));
    cones.push_back(local_cone(poly, g));
  }
  const std::size_t n = poly.size();
  std::vector<std::pair<Rational, Rational>> ivs;
  for (std::size_t e = 0; e < n; ++e) {
    ivs.clear();
    for (std::size_t gi = 0; gi < guards.size(); ++gi)
      for (auto& iv : edge_visible_intervals(poly, guards[gi], e, cones[gi])) ivs.push_back(iv);
    std::sort(ivs.begin(), ivs.end());
    Rational cur(0);
    const auto [A, B] = poly.edge(e);
    const Point dAB = B - A;
    const auto gap_witness = [&](const Rational& lo, const Rational& hi) -> std::optional<Point> {
      const Point mid = A + ((lo + hi) / 2) * dAB;
      for (const auto& g : guards)
        if (sees(poly, g, mid)) return std::nullopt;
      return mid;
    };
    bool bad = false;
    for (const auto& [lo, hi] : ivs) {
      if (lo > cur) {
        if (auto w = gap_witness(cur, lo)) return w;
        bad = true;
        break;
      }
      cur = rat_max(cur, hi);
    }
    if (!bad && cur < 1)
      if (auto w = gap_witness(cur, Rational(1))) return w;
  }
  return std::nullopt;
}

}  // namespace gallery
