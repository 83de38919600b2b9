#include <catch2/catch_amalgamated.hpp>

#include "gallery/geometry.hpp"
#include "gallery/polygon.hpp"
#include "gallery/rng.hpp"

using namespace gallery;

namespace {

// Independent orientation oracle: direct three-term expansion of the
// determinant, no shared code with orient().
int orient_oracle(const Point& p, const Point& q, const Point& r) {
  Rational det = p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y);
  return sign(det);
}

Point rand_pt(Rng& rng, long lim) {
  return {Rational(rng.range(-lim, lim)), Rational(rng.range(-lim, lim))};
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rat(6, 8) == rat(3, 4));
  CHECK(rat(-6, 8) == rat(-3, 4));
  CHECK(rat(6, -8) == rat(-3, 4));
  CHECK(format_rat(rat(3, 4)) == "3/4");
  CHECK(format_rat(rat(-8, 2)) == "-4");
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-12") == rat(-12));
  CHECK(parse_rat("-12/8") == rat(-3, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rat("abc"), FormatError);
  CHECK(rat_decimal(rat(3, 4)) == "0.75");
  CHECK(rat_decimal(rat(-1, 3)) == "-0.333333333");
  CHECK(rat_decimal(rat(7)) == "7");
}

TEST_CASE("orient basic and rational collinear") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  // Collinear triple with non-integer coordinates.
  Point a{rat(0), rat(0)}, b{rat(1, 3), rat(1, 7)}, c{rat(2, 3), rat(2, 7)};
  CHECK(orient(a, b, c) == 0);
  // Nudge one coordinate by 1/10^9 and the sign must react.
  Point c2{rat(2, 3), rat(2, 7) + rat(1, 1000000000)};
  CHECK(orient(a, b, c2) == 1);
}

TEST_CASE("orient agrees with independent expansion") {
  Rng rng(20260816);
  for (int iter = 0; iter < 2000; ++iter) {
    Point p = rand_pt(rng, 50), q = rand_pt(rng, 50), r = rand_pt(rng, 50);
    CHECK(orient(p, q, r) == orient_oracle(p, q, r));
  }
}

TEST_CASE("line intersection hand cases") {
  // x axis against the line through (0,1) and (1,2): meets at (-1, 0).
  Point h = line_intersect({0, 0}, {1, 0}, {0, 1}, {1, 2});
  CHECK(h == Point(-1, 0));
  // Diagonals of the unit square.
  CHECK(line_intersect({0, 0}, {1, 1}, {1, 0}, {0, 1}) == Point(rat(1, 2), rat(1, 2)));
  // Vertical against horizontal.
  CHECK(line_intersect({3, -5}, {3, 9}, {-2, 4}, {7, 4}) == Point(3, 4));
  CHECK_THROWS_AS(line_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}), ParallelLines);
  CHECK_THROWS_AS(line_intersect({0, 0}, {1, 1}, {2, 2}, {3, 3}), ParallelLines);
  CHECK_THROWS_AS(line_intersect({0, 0}, {0, 0}, {1, 0}, {1, 1}), Error);
}

TEST_CASE("line intersection determinant bound") {
  // For integer inputs with |coordinate| <= L the normal-system determinant
  // satisfies |det| <= 8 L^2, and the returned point lies on both lines.
  const long L = 100;
  Rng rng(7);
  const Rational bound(8 * L * L);
  int checked = 0;
  while (checked < 10000) {
    Point p1 = rand_pt(rng, L), q1 = rand_pt(rng, L);
    Point p2 = rand_pt(rng, L), q2 = rand_pt(rng, L);
    if (p1 == q1 || p2 == q2) continue;
    try {
      auto [pt, det] = line_intersect_ex(p1, q1, p2, q2);
      REQUIRE(rat_abs(det) <= bound);
      REQUIRE(orient(p1, q1, pt) == 0);
      REQUIRE(orient(p2, q2, pt) == 0);
      ++checked;
    } catch (const ParallelLines&) {
      // no unique intersection to bound
    }
  }
}

TEST_CASE("on segment") {
  CHECK(on_segment({0, 0}, {4, 0}, {2, 0}));
  CHECK(on_segment({0, 0}, {4, 0}, {0, 0}));
  CHECK(on_segment({0, 0}, {4, 0}, {4, 0}));
  CHECK_FALSE(on_segment({0, 0}, {4, 0}, {5, 0}));
  CHECK_FALSE(on_segment({0, 0}, {4, 0}, {2, 1}));
  CHECK(on_segment({1, 1}, {1, 1}, {1, 1}));
  CHECK_FALSE(on_segment({1, 1}, {1, 1}, {1, 2}));
  CHECK(on_segment({0, 0}, {1, 1}, {rat(1, 2), rat(1, 2)}));
}

TEST_CASE("segment hit params") {
  auto hits = segment_hit_params({0, 0}, {4, 0}, {2, -1}, {2, 1});
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == rat(1, 2));
  // Touching at an endpoint of the other segment.
  hits = segment_hit_params({0, 0}, {4, 0}, {3, 0}, {3, 5});
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == rat(3, 4));
  // Collinear overlap reports both overlap ends, clipped to the segment.
  hits = segment_hit_params({0, 0}, {4, 0}, {2, 0}, {9, 0});
  REQUIRE(hits.size() == 2);
  CHECK(hits[0] == rat(1, 2));
  CHECK(hits[1] == rat(1));
  // Collinear but disjoint.
  CHECK(segment_hit_params({0, 0}, {4, 0}, {5, 0}, {9, 0}).empty());
  // Parallel distinct lines.
  CHECK(segment_hit_params({0, 0}, {4, 0}, {0, 1}, {4, 1}).empty());
  // Crossing lines but outside the segments.
  CHECK(segment_hit_params({0, 0}, {4, 0}, {10, -1}, {10, 1}).empty());
}

TEST_CASE("segments meet") {
  CHECK(segments_meet({0, 0}, {4, 4}, {0, 4}, {4, 0}));
  CHECK(segments_meet({0, 0}, {4, 0}, {2, 0}, {2, 3}));   // T touch
  CHECK(segments_meet({0, 0}, {4, 0}, {4, 0}, {6, 2}));   // shared endpoint
  CHECK(segments_meet({0, 0}, {4, 0}, {1, 0}, {3, 0}));   // containment
  CHECK(segments_meet({0, 0}, {4, 0}, {3, 0}, {9, 0}));   // partial overlap
  CHECK_FALSE(segments_meet({0, 0}, {4, 0}, {5, 0}, {9, 0}));
  CHECK_FALSE(segments_meet({0, 0}, {4, 0}, {0, 1}, {4, 1}));
  CHECK_FALSE(segments_meet({0, 0}, {1, 0}, {2, 1}, {2, -1}));
}

TEST_CASE("point location in square") {
  SimplePolygon sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  CHECK(point_in(sq, {2, 2}) == Side::Inside);
  CHECK(point_in(sq, {0, 0}) == Side::Boundary);
  CHECK(point_in(sq, {2, 0}) == Side::Boundary);
  CHECK(point_in(sq, {4, 4}) == Side::Boundary);
  CHECK(point_in(sq, {5, 2}) == Side::Outside);
  CHECK(point_in(sq, {-1, 0}) == Side::Outside);
  CHECK(point_in(sq, {2, rat(39, 10)}) == Side::Inside);
}

TEST_CASE("point location with ray through vertices") {
  // Diamond: rightward ray from the center passes exactly through (4,2).
  SimplePolygon diamond({{2, 0}, {4, 2}, {2, 4}, {0, 2}});
  CHECK(point_in(diamond, {2, 2}) == Side::Inside);
  CHECK(point_in(diamond, {1, 2}) == Side::Inside);
  CHECK(point_in(diamond, {-1, 2}) == Side::Outside);
  CHECK(point_in(diamond, {5, 2}) == Side::Outside);
  CHECK(point_in(diamond, {4, 2}) == Side::Boundary);
  // Horizontal collinear edge on the ray.
  SimplePolygon flat({{0, 0}, {6, 0}, {6, 2}, {4, 2}, {2, 2}, {0, 2}});
  CHECK(point_in(flat, {1, 1}) == Side::Inside);
  CHECK(point_in(flat, {3, 2}) == Side::Boundary);
  CHECK(point_in(flat, {-2, 2}) == Side::Outside);
  CHECK(point_in(flat, {7, 2}) == Side::Outside);
}

TEST_CASE("point location concave") {
  // U shape; the notch gap is outside.
  SimplePolygon u({{0, 0}, {6, 0}, {6, 5}, {4, 5}, {4, 2}, {2, 2}, {2, 5}, {0, 5}});
  REQUIRE(is_simple(u));
  CHECK(point_in(u, {1, 4}) == Side::Inside);
  CHECK(point_in(u, {5, 4}) == Side::Inside);
  CHECK(point_in(u, {3, 4}) == Side::Outside);
  CHECK(point_in(u, {3, 1}) == Side::Inside);
  CHECK(point_in(u, {3, 2}) == Side::Boundary);
  CHECK(point_in(u, {2, 3}) == Side::Boundary);
}

TEST_CASE("signed area") {
  SimplePolygon sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  CHECK(signed_area2(sq) == rat(32));
  SimplePolygon cw({{0, 0}, {0, 4}, {4, 4}, {4, 0}});
  CHECK(signed_area2(cw) == rat(-32));
  SimplePolygon tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(signed_area2(tri) == rat(1));
}

TEST_CASE("is_simple accepts honest polygons") {
  CHECK(is_simple(SimplePolygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}})));
  // Straight-angle vertex in the middle of the bottom edge.
  CHECK(is_simple(SimplePolygon({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}})));
  // Comb with two teeth.
  CHECK(is_simple(SimplePolygon(
      {{0, 0}, {10, 0}, {10, 4}, {8, 4}, {8, 1}, {6, 1}, {6, 4}, {4, 4}, {4, 1}, {2, 1}, {2, 4}, {0, 4}})));
}

TEST_CASE("is_simple rejects defects") {
  std::string why;
  CHECK_FALSE(is_simple(SimplePolygon({{0, 0}, {1, 0}}), &why));
  // Bowtie.
  CHECK_FALSE(is_simple(SimplePolygon({{0, 0}, {4, 4}, {4, 0}, {0, 4}}), &why));
  // Repeated vertex.
  CHECK_FALSE(is_simple(SimplePolygon({{0, 0}, {4, 0}, {4, 4}, {4, 0}, {0, 4}}), &why));
  // Fold-back spike.
  CHECK_FALSE(is_simple(SimplePolygon({{0, 0}, {4, 0}, {2, 0}, {4, 4}, {0, 4}}), &why));
  // Vertex of one edge interior to a non-incident edge.
  CHECK_FALSE(is_simple(SimplePolygon({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}}), &why));
  // Clockwise ordering.
  CHECK_FALSE(is_simple(SimplePolygon({{0, 0}, {0, 4}, {4, 4}, {4, 0}}), &why));
  CHECK(why == "not counterclockwise");
  CHECK_THROWS_AS(require_simple(SimplePolygon({{0, 0}, {4, 4}, {4, 0}, {0, 4}})), NotSimple);
}

TEST_CASE("rng determinism") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
  Rng c(42);
  CHECK(c.range(-5, 5) >= -5);
  CHECK(c.range(-5, 5) <= 5);
}
