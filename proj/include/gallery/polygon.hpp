#pragma once

#include <cstddef>
#include <vector>

#include "gallery/geometry.hpp"

namespace gallery {

// Closed simple polygon, vertices in CCW order, no repeated vertices.
// Collinear consecutive vertices are allowed (flat corners carry labels in
// the constructions). Validity is checked by is_simple, not the constructor.
struct SimplePolygon {
  std::vector<Point> v;

  SimplePolygon() = default;
  explicit SimplePolygon(std::vector<Point> verts) : v(std::move(verts)) {}

  std::size_t size() const { return v.size(); }
  const Point& vertex(std::size_t i) const { return v[i % v.size()]; }
  // Edge i runs from vertex i to vertex i+1 (mod n).
  std::pair<Point, Point> edge(std::size_t i) const {
    return {v[i % v.size()], v[(i + 1) % v.size()]};
  }
};

// Twice the signed area; positive for CCW boundaries.
inline Rational signed_area2(const SimplePolygon& poly) {
  Rational acc(0);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = poly.edge(i);
    acc += cross(a, b);
  }
  return acc;
}

enum class Side { Outside, Boundary, Inside };

// Exact point location for the closed region bounded by poly. Boundary is
// detected with on_segment; interior by crossing parity of a rightward ray
// with half-open edge treatment (counts edges whose y-span contains p.y as
// [min, max)), so vertices on the ray are not double counted.
inline Side point_in(const SimplePolygon& poly, const Point& p) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = poly.edge(i);
    if (on_segment(a, b, p)) return Side::Boundary;
    const bool a_below = a.y <= p.y, b_below = b.y <= p.y;
    if (a_below == b_below) continue;
    // Edge crosses the horizontal line through p; test which side of the
    // edge the point is on to decide if the crossing is to the right.
    const int o = orient(a, b, p);
    if (o == 0) continue;  // collinear handled by on_segment above
    if ((b.y > a.y && o > 0) || (b.y < a.y && o < 0)) inside = !inside;
  }
  return inside ? Side::Inside : Side::Outside;
}

// Full O(n^2) exact simplicity check: at least three vertices, positive
// signed area, no repeated vertices, adjacent edges share only their common
// endpoint (straight continuations allowed, fold-backs rejected), and
// non-adjacent edges are fully disjoint.
inline bool is_simple(const SimplePolygon& poly, std::string* why = nullptr) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t n = poly.size();
  if (n < 3) return fail("fewer than three vertices");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (poly.v[i] == poly.v[j])
        return fail("repeated vertex at indices " + std::to_string(i) + "," + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = poly.edge(i);
    if (a == b) return fail("zero length edge " + std::to_string(i));
  }
  // Adjacent pairs: reject collinear fold-backs (next edge doubling back
  // over the previous one through the shared vertex).
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = poly.vertex(i);
    const Point& mid = poly.vertex(i + 1);
    const Point& next = poly.vertex(i + 2);
    if (orient(prev, mid, next) == 0 && sign(dot(prev - mid, next - mid)) > 0)
      return fail("fold-back at vertex " + std::to_string((i + 1) % n));
  }
  // Non-adjacent pairs must not meet at all.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const auto [a, b] = poly.edge(i);
      const auto [c, d] = poly.edge(j);
      if (segments_meet(a, b, c, d))
        return fail("edges " + std::to_string(i) + " and " + std::to_string(j) + " meet");
    }
  }
  if (sign(signed_area2(poly)) <= 0) return fail("not counterclockwise");
  return true;
}

inline void require_simple(const SimplePolygon& poly) {
  std::string why;
  if (!is_simple(poly, &why)) throw NotSimple(why);
}

}  // namespace gallery
