#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallery/rational.hpp"

namespace gallery {

struct Point {
  Rational x;
  Rational y;

  Point() : x(0), y(0) {}
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline std::string format_point(const Point& p) {
  return "(" + format_rat(p.x) + ", " + format_rat(p.y) + ")";
}

// Sign of the signed area of triangle (p, q, r): +1 left turn, -1 right
// turn, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q - p, r - p));
}

// True when p lies on the closed segment [a, b]. Degenerate segments
// (a == b) accept only that point.
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  return sign(dot(p - a, p - b)) <= 0;
}

struct LineIntersection {
  Point point;
  // Determinant of the 2x2 normal system; nonzero for non-parallel lines.
  Rational det;
};

// Intersection of line(p1, q1) with line(p2, q2) via the normal-form 2x2
// system. Each line with endpoints p, q has normal n = (q.y - p.y, p.x - q.x)
// and offset c = n . p. Throws ParallelLines when the determinant vanishes.
inline LineIntersection line_intersect_ex(const Point& p1, const Point& q1, const Point& p2,
                                          const Point& q2) {
  if (p1 == q1 || p2 == q2) throw Error("line through coincident points");
  const Rational a1 = q1.y - p1.y, b1 = p1.x - q1.x;
  const Rational a2 = q2.y - p2.y, b2 = p2.x - q2.x;
  const Rational c1 = a1 * p1.x + b1 * p1.y;
  const Rational c2 = a2 * p2.x + b2 * p2.y;
  Rational det = a1 * b2 - a2 * b1;
  if (det == 0) throw ParallelLines();
  Point pt{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
  return {pt, det};
}

inline Point line_intersect(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
  return line_intersect_ex(p1, q1, p2, q2).point;
}

// Ray from origin through dir (dir != origin) intersected with line(a, b).
// Returns the hit with the smallest nonnegative parameter, or nullopt when
// the ray misses or runs parallel.
inline std::optional<Point> ray_line_intersect(const Point& origin, const Point& dir,
                                               const Point& a, const Point& b) {
  const Point d = dir - origin;
  const Point e = b - a;
  const Rational denom = cross(d, e);
  if (denom == 0) return std::nullopt;
  const Rational tnum = cross(a - origin, e);
  const Rational t = tnum / denom;
  if (sign(t) < 0) return std::nullopt;
  return origin + t * d;
}

// Parameters t in [0, 1] along segment a->b at which the segment meets
// segment c->d. Proper and touching crossings contribute one parameter;
// collinear overlap contributes the overlap's endpoint parameters.
inline std::vector<Rational> segment_hit_params(const Point& a, const Point& b, const Point& c,
                                                const Point& d) {
  std::vector<Rational> out;
  const Point ab = b - a;
  const Point cd = d - c;
  const Rational denom = cross(ab, cd);
  if (denom != 0) {
    const Rational t = cross(c - a, cd) / denom;
    const Rational u = cross(c - a, ab) / denom;
    if (sign(t) >= 0 && t <= 1 && sign(u) >= 0 && u <= 1) out.push_back(t);
    return out;
  }
  if (orient(a, b, c) != 0) return out;  // parallel, distinct lines
  // Collinear: project c and d onto a->b and clip the overlap to [0, 1].
  const Rational len2 = dot(ab, ab);
  if (len2 == 0) {
    if (on_segment(c, d, a)) out.push_back(Rational(0));
    return out;
  }
  Rational tc = dot(c - a, ab) / len2;
  Rational td = dot(d - a, ab) / len2;
  Rational lo = rat_min(tc, td), hi = rat_max(tc, td);
  lo = rat_max(lo, Rational(0));
  hi = rat_min(hi, Rational(1));
  if (lo > hi) return out;
  out.push_back(lo);
  if (hi != lo) out.push_back(hi);
  return out;
}

// True when closed segments [a, b] and [c, d] share at least one point.
inline bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
      ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
    return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace gallery
