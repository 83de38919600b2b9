#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "gallery/coverage.hpp"
#include "gallery/pointguard.hpp"
#include "gallery/solvers.hpp"
#include "gallery/sths.hpp"
#include "test_util.hpp"

using namespace gallery;
using testutil::random_sths;

namespace {

STHSInstance hand_sths(int k, int t, std::vector<std::pair<int, int>> a_flat,
                       std::vector<std::pair<int, int>> b_flat) {
  STHSInstance st;
  st.k = k;
  st.t = t;
  for (int j = 1; j <= k; ++j) {
    st.sigma.push_back(j);
    std::vector<int> ident;
    for (int i = 1; i <= t; ++i) ident.push_back(i);
    st.sigma_j.push_back(ident);
    st.class_labels.push_back("C" + std::to_string(j));
  }
  st.real_size.assign(k, t);
  auto conv = [&](std::vector<TrackInterval>& dst, const char* tag,
                  const std::vector<std::pair<int, int>>& flat) {
    int q = 0;
    for (auto [lo, hi] : flat) {
      TrackInterval iv;
      if (lo <= hi) {
        iv.j_lo = (lo - 1) / t + 1;
        iv.i_lo = (lo - 1) % t + 1;
        iv.j_hi = (hi - 1) / t + 1;
        iv.i_hi = (hi - 1) % t + 1;
      }
      iv.label = tag + std::to_string(++q);
      dst.push_back(iv);
    }
  };
  conv(st.s_a, "A", a_flat);
  conv(st.s_b, "B", b_flat);
  st.validate();
  return st;
}

std::vector<PgCandidateId> interval_ids(const STHSInstance& st, const TrackInterval& iv,
                                        bool track_a) {
  std::vector<PgCandidateId> ids;
  if (iv.empty()) return ids;
  int lo = (iv.j_lo - 1) * st.t + iv.i_lo;
  int hi = (iv.j_hi - 1) * st.t + iv.i_hi;
  for (int pos = lo; pos <= hi; ++pos) {
    int slot = (pos - 1) / st.t + 1;
    int r = (pos - 1) % st.t + 1;
    if (track_a) {
      ids.push_back({0, slot, r});
    } else {
      int j = st.sigma[slot - 1];
      ids.push_back({2, j, st.sigma_j[j - 1][r - 1]});
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool seen_by_any(const PointGuardInstance& pg, const std::vector<Point>& guards,
                 const PgPocketId& id) {
  Point root = pg.root_point(id);
  for (const Point& g : guards)
    if (sees(pg.polygon, g, root)) return true;
  return false;
}

}  // namespace

TEST_CASE("length parameters respect the separation chain") {
  STHSInstance st = hand_sths(1, 1, {{1, 1}}, {{1, 1}});
  LengthParams p = choose_lengths(st);
  REQUIRE(p.s == 1);
  REQUIRE(p.y == 64);
  REQUIRE(p.x == p.y * 4);
  REQUIRE(p.D == p.x * 128);
  REQUIRE(p.L == p.D * 4);
  REQUIRE(p.Lp == p.L * 2);
  REQUIRE(p.F == p.y * p.D);
  REQUIRE_NOTHROW(assert_separations(p, st));

  Rng rng(411);
  for (int trial = 0; trial < 20; ++trial) {
    int k = static_cast<int>(rng.range(1, 3));
    int t = static_cast<int>(rng.range(1, 4));
    STHSInstance r = random_sths(rng, k, t, static_cast<int>(rng.range(1, 6)),
                                 static_cast<int>(rng.range(1, 6)));
    REQUIRE_NOTHROW(assert_separations(choose_lengths(r), r));
  }
}

TEST_CASE("the minimal hall is simple and fully covered by its triple") {
  STHSInstance st = hand_sths(1, 1, {{1, 1}}, {{1, 1}});
  PointGuardInstance pg = build_pointguard(st);

  REQUIRE(pg.budget == 3);
  REQUIRE(pg.k == 1);
  REQUIRE(pg.t == 1);
  // two track pockets, six linker pockets, one bar cone, one slit
  REQUIRE(pg.pockets.size() == 10);
  REQUIRE(is_simple(pg.polygon));

  auto choice = solve_pg_structured(pg);
  REQUIRE(choice.has_value());
  REQUIRE(*choice == std::vector<int>{1});

  std::vector<Point> guards = structured_guards(pg, *choice);
  REQUIRE(guards.size() == 3);
  CoverReport rep = covers(pg.polygon, guards);
  INFO("witness " << (rep.witness ? format_point(*rep.witness) : "none"));
  REQUIRE(rep.covered);
}

TEST_CASE("pocket signatures match their published expectations") {
  Rng rng(2207);
  for (int trial = 0; trial < 4; ++trial) {
    int k = static_cast<int>(rng.range(1, 2));
    int t = static_cast<int>(rng.range(2, 3));
    int na = static_cast<int>(rng.range(1, 4));
    int nb = static_cast<int>(rng.range(1, 4));
    STHSInstance st = random_sths(rng, k, t, na, nb);
    PointGuardInstance pg = build_pointguard(st);
    INFO("trial " << trial << " k=" << k << " t=" << t);

    for (const PgPocket& pk : pg.pockets) {
      INFO("pocket " << to_string(pk.id));
      std::vector<PgCandidateId> sig = pocket_signature(pg, pk.id);
      REQUIRE(sig == pk.expected);
    }

    for (std::size_t q = 0; q < st.s_a.size(); ++q) {
      const PgPocket& pk = pg.pockets[pg.track_a[q]];
      REQUIRE(pk.expected == interval_ids(st, st.s_a[q], true));
    }
    for (std::size_t q = 0; q < st.s_b.size(); ++q) {
      const PgPocket& pk = pg.pockets[pg.track_b[q]];
      REQUIRE(pk.expected == interval_ids(st, st.s_b[q], false));
    }
  }
}

TEST_CASE("slit and bar pockets answer to the whole candidate row") {
  STHSInstance st = hand_sths(2, 2, {{1, 2}}, {{3, 4}});
  PointGuardInstance pg = build_pointguard(st);
  for (int j = 1; j <= 2; ++j) {
    std::vector<PgCandidateId> slit_sig =
        pocket_signature(pg, {PgPocketKind::Slit, 0, j, 0});
    std::vector<PgCandidateId> want;
    for (int i = 1; i <= 2; ++i) want.push_back({0, j, i});
    REQUIRE(slit_sig == want);

    std::vector<PgCandidateId> bar_sig =
        pocket_signature(pg, {PgPocketKind::BarCone, 0, j, 0});
    want.clear();
    for (int i = 1; i <= 2; ++i) want.push_back({1, j, i});
    REQUIRE(bar_sig == want);
  }
  REQUIRE_THROWS_AS(pocket_signature(pg, PgPocketId{PgPocketKind::Slit, 0, 9, 0}),
                    UnknownPocket);
}

TEST_CASE("weak linker rows force matching picks") {
  STHSInstance st = hand_sths(1, 3, {{1, 3}}, {{1, 3}});
  PointGuardInstance pg = build_pointguard(st);
  const int t = 3;

  for (int c = 1; c <= t; ++c) {
    std::vector<Point> guards = structured_guards(pg, {c});
    for (const PgPocket& pk : pg.pockets) {
      INFO("choice " << c << " pocket " << to_string(pk.id));
      REQUIRE(seen_by_any(pg, guards, pk.id));
    }
  }

  int mismatch_checked = 0;
  for (int a = 1; a <= t; ++a)
    for (int b = 1; b <= t; ++b)
      for (int c = 1; c <= t; ++c) {
        if (a == b && b == c) continue;
        std::vector<Point> guards = {pg.candidates.at({1, a})[0],
                                     pg.candidates.at({1, b})[1],
                                     pg.candidates.at({1, c})[2]};
        // the base/beta and beta/bar rows are clean of third-party
        // candidates, so one of them always exposes a mismatch
        bool exposed = false;
        PgPocketId exposed_id;
        for (const PgPocket& pk : pg.pockets) {
          if (pk.id.kind != PgPocketKind::LinkerLeft &&
              pk.id.kind != PgPocketKind::LinkerRight)
            continue;
          if (pk.id.fam == 1) continue;
          if (!seen_by_any(pg, guards, pk.id)) {
            exposed = true;
            exposed_id = pk.id;
            break;
          }
        }
        INFO("triple " << a << "," << b << "," << c);
        REQUIRE(exposed);
        CoverReport rep = covers_region(pg.polygon, pg_pocket_region(pg, exposed_id),
                                        guards);
        REQUIRE_FALSE(rep.covered);
        REQUIRE(rep.witness.has_value());
        ++mismatch_checked;
      }
  REQUIRE(mismatch_checked == t * t * t - t);
}

TEST_CASE("hall coverage is equivalent to hitting both tracks") {
  Rng rng(3301);
  int solvable = 0;
  for (int trial = 0; trial < 6; ++trial) {
    int k = static_cast<int>(rng.range(1, 2));
    int t = static_cast<int>(rng.range(1, 3));
    STHSInstance st = random_sths(rng, k, t, static_cast<int>(rng.range(1, 3)),
                                  static_cast<int>(rng.range(1, 3)));
    PointGuardInstance pg = build_pointguard(st);
    auto from_geometry = solve_pg_structured(pg);
    auto from_tracks = solve_sths_bf(st);
    INFO("trial " << trial);
    REQUIRE(from_geometry.has_value() == from_tracks.has_value());
    if (from_geometry) {
      REQUIRE(*from_geometry == *from_tracks);
      REQUIRE(verify_sths_solution(st, *from_geometry));
      ++solvable;
    }
  }
  REQUIRE(solvable > 0);

  // a sentinel interval admits no hit and no covering triple
  STHSInstance dead = hand_sths(1, 2, {{2, 1}}, {{1, 2}});
  REQUIRE(dead.s_a[0].empty());
  PointGuardInstance pg = build_pointguard(dead);
  REQUIRE_FALSE(solve_pg_structured(pg).has_value());
  REQUIRE_FALSE(solve_sths_bf(dead).has_value());
}

TEST_CASE("unhit track pockets carry the witness") {
  STHSInstance st = hand_sths(1, 2, {{2, 2}}, {{1, 2}});
  PointGuardInstance pg = build_pointguard(st);

  std::vector<Point> bad = structured_guards(pg, {1});
  PgPocketId target{PgPocketKind::TrackA, 0, 0, 1};
  REQUIRE_FALSE(seen_by_any(pg, bad, target));
  SimplePolygon region = pg_pocket_region(pg, target);
  CoverReport rep = covers_region(pg.polygon, region, bad);
  REQUIRE_FALSE(rep.covered);
  REQUIRE(rep.witness.has_value());
  REQUIRE(point_in(region, *rep.witness) != Side::Outside);

  std::vector<Point> good = structured_guards(pg, {2});
  REQUIRE(seen_by_any(pg, good, target));
  REQUIRE(covers_region(pg.polygon, region, good).covered);
}

TEST_CASE("vertex count stays within the frozen budget") {
  Rng rng(5113);
  for (int trial = 0; trial < 5; ++trial) {
    int k = static_cast<int>(rng.range(1, 3));
    int t = static_cast<int>(rng.range(1, 3));
    int na = static_cast<int>(rng.range(1, 5));
    int nb = static_cast<int>(rng.range(1, 5));
    STHSInstance st = random_sths(rng, k, t, na, nb);
    PointGuardInstance pg = build_pointguard(st);
    long cap = 32L * (static_cast<long>(k) * t + na + nb);
    REQUIRE(static_cast<long>(pg.polygon.size()) <= cap);
    REQUIRE(pg.budget == 3 * k);
    REQUIRE(pg.track_a.size() == st.s_a.size());
    REQUIRE(pg.track_b.size() == st.s_b.size());
  }
}
