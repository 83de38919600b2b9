#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gallery/polygon.hpp"

namespace gallery {

// Closed-segment visibility: a sees b iff segment [a, b] stays inside the
// closed region (grazing along walls and passing through vertices count).
// Both endpoints must lie in the closed polygon. The segment is cut at every
// boundary crossing event and each gap midpoint is located exactly.
inline bool sees(const SimplePolygon& poly, const Point& a, const Point& b) {
  if (point_in(poly, a) == Side::Outside)
    throw PointOutside("sees endpoint " + format_point(a));
  if (point_in(poly, b) == Side::Outside)
    throw PointOutside("sees endpoint " + format_point(b));
  if (a == b) return true;
  std::vector<Rational> cuts;
  cuts.emplace_back(0);
  cuts.emplace_back(1);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [c, d] = poly.edge(i);
    for (auto& t : segment_hit_params(a, b, c, d)) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const Point ab = b - a;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (point_in(poly, a + mid * ab) == Side::Outside) return false;
  }
  return true;
}

// Interior direction cone at a boundary point: directions from u CCW to w.
// full is set for interior points (every direction admissible).
struct LocalCone {
  bool full = true;
  Point u, w;
};

inline LocalCone local_cone(const SimplePolygon& poly, const Point& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (poly.v[i] == p)
      return {false, poly.vertex(i + 1) - p, poly.vertex(i + n - 1) - p};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [c, d] = poly.edge(i);
    if (on_segment(c, d, p)) return {false, d - p, c - p};
  }
  return {};
}

// Closed cone membership for a direction d (boundary directions included).
inline bool cone_contains(const LocalCone& k, const Point& d) {
  if (k.full) return true;
  const int s = sign(cross(k.u, k.w));
  const int cu = sign(cross(k.u, d));
  const int cw = sign(cross(d, k.w));
  if (s > 0) return cu >= 0 && cw >= 0;
  if (s < 0) return !(cu < 0 && cw < 0);
  if (sign(dot(k.u, k.w)) < 0) return cu >= 0;
  return cu == 0 && sign(dot(k.u, d)) > 0;
}

namespace detail {

// Open solution range of sign(alpha + beta t) == want, intersected in place.
struct OpenRange {
  bool empty = false;
  bool has_lo = false, has_hi = false;
  Rational lo, hi;

  void raise_lo(const Rational& v) {
    if (!has_lo || v > lo) {
      lo = v;
      has_lo = true;
    }
    if (has_hi && lo >= hi) empty = true;
  }
  void lower_hi(const Rational& v) {
    if (!has_hi || v < hi) {
      hi = v;
      has_hi = true;
    }
    if (has_lo && lo >= hi) empty = true;
  }
  void require_sign(const Rational& alpha, const Rational& beta, int want) {
    if (empty) return;
    const int sb = sign(beta);
    if (sb == 0) {
      if (sign(alpha) != want) empty = true;
      return;
    }
    const Rational root = -alpha / beta;
    if ((sb > 0) == (want > 0))
      raise_lo(root);
    else
      lower_hi(root);
  }
};

// Root of alpha + beta t inside (0, 1), if any.
inline std::optional<Rational> unit_root(const Rational& alpha, const Rational& beta) {
  if (sign(beta) == 0) return std::nullopt;
  Rational r = -alpha / beta;
  if (sign(r) > 0 && r < 1) return r;
  return std::nullopt;
}

}  // namespace detail

// Maximal closed visible sub-intervals (in edge parameters) of edge e seen
// from p. Composes open proper shadows of occluder edges with the local
// interior cone when p is on the boundary. Isolated visible points (spikes
// where two shadows abut) are dropped; positive-length intervals are exact.
inline std::vector<std::pair<Rational, Rational>> edge_visible_intervals(
    const SimplePolygon& poly, const Point& p, std::size_t e, const LocalCone& cone) {
  const std::size_t n = poly.size();
  const Point A = poly.vertex(e), B = poly.vertex(e + 1);
  std::vector<std::pair<Rational, Rational>> out;
  if (p == A || p == B) {
    out.emplace_back(Rational(0), Rational(1));
    return out;
  }
  const int side = orient(A, B, p);
  if (side < 0) return out;

  if (side == 0) {
    // p on the edge's line: visibility along the line is a prefix of each ray.
    const Point dir = B - A;
    const Rational len2 = dot(dir, dir);
    const Rational tp = dot(p - A, dir) / len2;
    const auto reach = [&](const Point& target) -> Rational {
      // Largest fraction r of segment p -> target staying inside the polygon.
      std::vector<Rational> cuts;
      cuts.emplace_back(0);
      cuts.emplace_back(1);
      for (std::size_t f = 0; f < n; ++f) {
        const auto [c, d] = poly.edge(f);
        for (auto& t : segment_hit_params(p, target, c, d)) cuts.push_back(t);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      const Point pt = target - p;
      Rational got(0);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        if (point_in(poly, p + mid * pt) == Side::Outside) return got;
        got = cuts[i + 1];
      }
      return got;
    };
    Rational lo, hi;
    if (on_segment(A, B, p)) {
      const Rational rA = reach(A), rB = reach(B);
      lo = tp - rA * tp;
      hi = tp + rB * (1 - tp);
    } else if (tp > 1) {
      const Rational r = reach(A);
      lo = tp * (1 - r);
      hi = Rational(1);
    } else {
      const Rational r = reach(B);
      lo = Rational(0);
      hi = tp + r * (1 - tp);
    }
    lo = rat_max(lo, Rational(0));
    hi = rat_min(hi, Rational(1));
    if (lo < hi) out.emplace_back(lo, hi);
    return out;
  }

  // Proper case: p strictly on the interior side of line(A, B).
  std::vector<std::pair<Rational, Rational>> blocked;
  for (std::size_t f = 0; f < n; ++f) {
    if (f == e) continue;
    const auto [c, d] = poly.edge(f);
    if (p == c || p == d) continue;
    if (on_segment(c, d, p)) continue;
    const int sig = orient(p, c, d);
    if (sig == 0) continue;
    detail::OpenRange r;
    // x(t) strictly inside wedge(p; c, d) and strictly beyond line(c, d).
    r.require_sign(cross(c - p, A - p), cross(c - p, B - A), sig);
    if (r.empty) continue;
    r.require_sign(cross(A - p, d - p), cross(B - A, d - p), sig);
    if (r.empty) continue;
    r.require_sign(cross(d - c, A - c), cross(d - c, B - A), -orient(c, d, p));
    if (r.empty) continue;
    Rational lo = r.has_lo ? rat_max(r.lo, Rational(0)) : Rational(0);
    Rational hi = r.has_hi ? rat_min(r.hi, Rational(1)) : Rational(1);
    if (lo < hi) blocked.emplace_back(std::move(lo), std::move(hi));
  }
  std::sort(blocked.begin(), blocked.end());
  std::vector<std::pair<Rational, Rational>> cands;
  Rational cur(0);
  bool open_tail = true;
  for (auto& [lo, hi] : blocked) {
    if (lo >= cur) cands.emplace_back(cur, lo);
    if (hi > cur) cur = hi;
    if (cur >= 1) {
      open_tail = false;
      break;
    }
  }
  if (open_tail) cands.emplace_back(cur, Rational(1));

  if (!cone.full) {
    // Subdivide candidates where the direction crosses a cone boundary ray,
    // then keep only sub-pieces whose midpoint direction lies in the cone.
    std::vector<Rational> cuts;
    const Point rel = A - p, dAB = B - A;
    if (auto t = detail::unit_root(cross(cone.u, rel), cross(cone.u, dAB))) cuts.push_back(*t);
    if (auto t = detail::unit_root(cross(cone.w, rel), cross(cone.w, dAB))) cuts.push_back(*t);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<Rational, Rational>> kept;
    for (auto& [lo, hi] : cands) {
      std::vector<Rational> stops;
      stops.push_back(lo);
      for (auto& t : cuts)
        if (t > lo && t < hi) stops.push_back(t);
      stops.push_back(hi);
      for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
        const Rational mid = (stops[i] + stops[i + 1]) / 2;
        if (cone_contains(cone, A + mid * dAB - p)) kept.emplace_back(stops[i], stops[i + 1]);
      }
    }
    cands = std::move(kept);
  }

  for (auto& c : cands)
    if (c.first < c.second) {
      if (!out.empty() && out.back().second == c.first)
        out.back().second = c.second;
      else
        out.push_back(c);
    }
  return out;
}

// Visibility polygon with window labels. Edge i of poly (from vertex i to
// i+1) is a window when it lies along a sight ray rather than on the input
// boundary. Star shaped around p; vertices follow input boundary order.
// Isolated visible spikes are omitted, so the region can undercount by a
// measure zero set in degenerate alignments.
struct VisPolygon {
  SimplePolygon poly;
  std::vector<std::uint8_t> window;
};

inline VisPolygon visibility_polygon_ex(const SimplePolygon& poly, const Point& p) {
  if (point_in(poly, p) == Side::Outside)
    throw PointOutside("visibility from " + format_point(p));
  const LocalCone cone = local_cone(poly, p);
  const std::size_t n = poly.size();
  std::vector<std::vector<Point>> chains;
  for (std::size_t e = 0; e < n; ++e) {
    const Point A = poly.vertex(e), B = poly.vertex(e + 1);
    const Point dAB = B - A;
    for (auto& [lo, hi] : edge_visible_intervals(poly, p, e, cone)) {
      const Point s = A + lo * dAB;
      const Point t = A + hi * dAB;
      if (!chains.empty() && chains.back().back() == s)
        chains.back().push_back(t);
      else
        chains.push_back({s, t});
    }
  }
  if (chains.empty()) throw GeometryDegenerate("empty visibility region");
  if (chains.size() > 1 && chains.front().front() == chains.back().back()) {
    auto last = std::move(chains.back());
    chains.pop_back();
    last.pop_back();
    chains.front().insert(chains.front().begin(), last.begin(), last.end());
  }
  VisPolygon out;
  if (chains.size() == 1 && chains.front().front() == chains.front().back()) {
    auto& c = chains.front();
    c.pop_back();
    out.poly.v = std::move(c);
    out.window.assign(out.poly.size(), 0);
    return out;
  }
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto& c = chains[k];
    for (std::size_t i = 0; i < c.size(); ++i) {
      out.poly.v.push_back(c[i]);
      out.window.push_back(i + 1 < c.size() ? 0 : 1);
    }
    const Point& wend = c.back();
    const Point& wstart = chains[(k + 1) % chains.size()].front();
    if (wend != p && wstart != p && orient(p, wend, wstart) != 0)
      throw GeometryDegenerate("window off sight ray at " + format_point(wend));
  }
  return out;
}

inline SimplePolygon visibility_polygon(const SimplePolygon& poly, const Point& p) {
  return visibility_polygon_ex(poly, p).poly;
}

}  // namespace gallery
