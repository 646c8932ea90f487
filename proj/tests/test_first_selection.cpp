#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "selection/constructions.hpp"
#include "selection/depth.hpp"
#include "selection/first_selection.hpp"

using namespace sel;

namespace {

PointSet four() { return PointSet(2, {{0, 0}, {1, 3}, {2, 1}, {3, 2}}); }
PointSet chain_down(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i, n - 1 - i});
  return PointSet(2, pts);
}
PointSet chain_up(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i, i});
  return PointSet(2, pts);
}

// Every open cell of the coordinate grid, as (2x, 2y) over 2.
i64 oracle_cell_max(const PointSet& P, Family f) {
  std::vector<i64> xs, ys;
  for (const auto& p : P) {
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  auto reps = [](std::vector<i64> v) {
    std::sort(v.begin(), v.end());
    std::vector<i64> out{2 * v.front() - 1, 2 * v.back() + 1};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i] + v[i + 1]);
    return out;
  };
  i64 best = 0;
  for (i64 x : reps(xs))
    for (i64 y : reps(ys)) best = std::max(best, oracle::depth(P, f, RationalPoint({x, y}, 2)));
  return best;
}

}  // namespace

TEST_CASE("weak maxima on small sets") {
  const auto r = weak_max(chain_up(4), Family::Rectangle);
  CHECK(r.depth == 4);
  CHECK(oracle::depth(chain_up(4), Family::Rectangle, r.point) == 4);

  const auto q = weak_max(four(), Family::Quadrant);
  CHECK(q.depth == 6);
  CHECK(q.point == RationalPoint({4, 4}, 1));

  for (Family f : {Family::Rectangle, Family::Quadrant, Family::Skyline, Family::Disk, Family::SlabBoth})
    CHECK(weak_max(PointSet(2, {{5, 5}}), f).depth == 0);
}

TEST_CASE("strong maxima on small sets") {
  // Pairs strictly around chain point k: k * (n - 1 - k).
  const auto c = strong_max(chain_down(4), Family::Quadrant);
  CHECK(c.depth == 2);
  CHECK(c.depth == oracle::strong_max(chain_down(4), Family::Quadrant));
  CHECK((c.index == 1 || c.index == 2));

  const PointSet square(2, {{707, 708}, {-708, 707}, {-707, -708}, {708, -707}});
  CHECK(strong_max(square, Family::Rectangle).depth == oracle::strong_max(square, Family::Rectangle));
  CHECK(strong_max(square, Family::Rectangle).depth == 0);  // each rectangle misses the other two corners

  const PointSet two(2, {{0, 0}, {3, 5}});
  for (Family f : {Family::Rectangle, Family::Quadrant, Family::Skyline, Family::Disk, Family::SlabBoth,
                   Family::DownTriangle})
    CHECK(strong_max(two, f).depth == 0);
}

TEST_CASE("strong rectangle centerpoint") {
  const int i = strong_rect_centerpoint(four());
  CHECK((i == 1 || i == 2));
  CHECK(max_halfplane_count(four(), i) <= 3);

  const auto up = chain_up(8);
  const int j = strong_rect_centerpoint(up);
  CHECK(max_halfplane_count(up, j) <= 6);
  CHECK((j >= 1 && j <= 6));

  CHECK(strong_rect_centerpoint(PointSet(2, {{4, 9}})) == 0);
}

TEST_CASE("quadrant construction") {
  const int i = quadrant_strong_point(chain_down(4));
  CHECK((i == 1 || i == 2));
  CHECK(oracle::depth(chain_down(4), Family::Quadrant, chain_down(4)[i]) == 2);

  const auto P = four();
  CHECK(oracle::depth(P, Family::Quadrant, P[quadrant_strong_point(P)]) >= 2);

  const PointSet two(2, {{0, 0}, {3, 5}});
  CHECK(oracle::depth(two, Family::Quadrant, two[quadrant_strong_point(two)]) == 0);
}

TEST_CASE("skyline construction") {
  ConstructionSpec spec;
  spec.kind = ConstructionKind::Semicircle;
  spec.n = 12;
  const auto semi = generate(spec);
  CHECK(oracle::depth(semi, Family::Skyline, semi[skyline_strong_point(semi)]) >= 4);

  // Column x in [0, 2], at or below y = 1: (0,0) and (2,1), both of depth 0.
  const PointSet three(2, {{0, 0}, {1, 3}, {2, 1}});
  const int k = skyline_strong_point(three);
  CHECK((k == 0 || k == 2));

  CHECK(skyline_strong_point(chain_up(3)) == 1);
}

TEST_CASE("hypersphere weak point") {
  const PointSet sym(2, {{2, 0}, {-2, 0}, {0, 1}, {0, -1}});
  const auto r = hypersphere_weak_point(sym);
  CHECK(r.point == RationalPoint({0, 0}, 1));
  CHECK(r.depth == oracle::depth(sym, Family::Hypersphere, r.point));
  CHECK(r.depth >= 2);

  ConstructionSpec spec;
  spec.kind = ConstructionKind::IncreasingLine;
  spec.n = 12;
  spec.d = 3;
  const auto line = generate(spec);
  const auto l = hypersphere_weak_point(line);
  CHECK(l.depth == oracle::depth(line, Family::Hypersphere, l.point));
  CHECK(l.depth >= 6);

  CHECK(hypersphere_weak_point(PointSet(2, {{0, 0}, {4, 1}})).depth == 1);
}

TEST_CASE("symmetric peeling") {
  const PointSet sym(2, {{2, 0}, {-2, 0}, {0, 1}, {0, -1}});
  const int i = symmetric_peel(sym);
  CHECK((i == 2 || i == 3));
  CHECK(oracle::depth(sym, Family::Disk, sym[i]) == 1);

  // 16 points evenly around a circle, built in +/- pairs.
  std::vector<Point> pts;
  for (int k = 0; k < 8; ++k) {
    const double a = (k + 0.3) * M_PI / 8;
    const i64 x = std::llround(1e6 * std::cos(a)), y = std::llround(1e6 * std::sin(a));
    pts.push_back({x, y});
    pts.push_back({-x, -y});
  }
  const PointSet ring(2, pts);
  const int j = symmetric_peel(ring);
  CHECK(2 * oracle::depth(ring, Family::Disk, ring[j]) >= 7 * 7);

  CHECK(oracle::depth(PointSet(2, {{3, 1}, {-3, -1}}), Family::Disk, Point{3, 1}) == 0);
  CHECK_THROWS_AS(symmetric_peel(four()), NotSymmetric);
}

TEST_CASE("recursive box point") {
  oracle::Gen g(16);
  const auto P = g.distinct(16, 3, 500);
  const auto r = box_point_recursive(P);
  CHECK(r.depth == oracle::depth(P, Family::Box, r.point));
  CHECK(r.depth >= 0);
  CHECK(weak_max(P, Family::Box).depth >= r.depth);

  const PointSet two(3, {{0, 0, 0}, {2, 4, 6}});
  const auto t = box_point_recursive(two);
  CHECK(t.depth == 1);
  CHECK(oracle::depth(two, Family::Box, t.point) == 1);
}

TEST_CASE("bound checks") {
  ConstructionSpec spec;
  spec.kind = ConstructionKind::Circle;
  spec.n = 16;
  const auto circle = generate(spec);
  BoundSpec b;
  b.family = Family::Rectangle;
  b.variant = Variant::Strong;
  b.coefficient = Rational(1, 16);
  b.direction = BoundDirection::Upper;
  b.finder = Finder::Max;
  const auto c = verify_first_selection(circle, b);
  // Evenly spaced points: n^2/16 - n/4 exactly.
  CHECK(c.observed == oracle::strong_max(circle, Family::Rectangle));
  CHECK(c.observed == 12);
  CHECK(c.holds);

  oracle::Gen g(24);
  const auto slab = *default_bound(Family::SlabBoth, Variant::Strong, 2);
  CHECK(slab.coefficient == Rational(3, 8));
  CHECK(slab.slack == 3);
  CHECK(verify_first_selection(g.distinct(24, 2, 5000), slab).holds);

  for (Family f : {Family::Rectangle, Family::Quadrant, Family::Skyline, Family::Disk})
    for (Variant v : {Variant::Strong, Variant::Weak}) {
      const auto spec1 = default_bound(f, v, 2);
      REQUIRE(spec1);
      CHECK(verify_first_selection(PointSet(2, {{1, 1}}), *spec1).holds);
    }
  CHECK_FALSE(default_bound(Family::DownTriangle, Variant::Strong, 2));
  CHECK(default_bound(Family::Box, Variant::Weak, 3)->coefficient == Rational(1, 128));
  CHECK(default_bound(Family::Box, Variant::Weak, 2)->coefficient == Rational(1, 8));
}

TEST_CASE("property: weak maxima match the cell oracle") {
  oracle::Gen g(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(g.in(2, 10));
    const auto P = g.distinct(n, 2, 60);
    for (Family f : {Family::Rectangle, Family::SlabBoth, Family::Skyline, Family::Quadrant, Family::VSlab,
                     Family::HSlab}) {
      CAPTURE(trial);
      CAPTURE(family_name(f));
      const auto r = weak_max(P, f);
      CHECK(r.depth == oracle::depth(P, f, r.point));
      CHECK(r.depth == oracle_cell_max(P, f));
    }
    for (Family f : {Family::Disk, Family::DownTriangle}) {
      const auto r = weak_max(P, f);
      CHECK(r.depth == oracle::depth(P, f, r.point));
      CHECK(r.depth >= oracle::strong_max(P, f));
      CHECK(r.depth >= oracle_cell_max(P, f));
    }
  }
}

TEST_CASE("property: strong maxima match the oracle") {
  oracle::Gen g(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto P = g.distinct(static_cast<int>(g.in(1, 16)), 2, 400);
    for (Family f : {Family::Rectangle, Family::SlabBoth, Family::Skyline, Family::Quadrant, Family::Disk,
                     Family::DownTriangle}) {
      const auto r = strong_max(P, f);
      CHECK(r.depth == oracle::strong_max(P, f));
      CHECK(r.depth == oracle::depth(P, f, P[r.index]));
    }
  }
}

TEST_CASE("property: constructive points meet their lower bounds") {
  oracle::Gen g(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(g.in(8, 32));
    const auto P = g.distinct(n, 2, 4 * n * n);
    const i64 nn = static_cast<i64>(n) * n;
    CHECK(16 * oracle::depth(P, Family::Rectangle, P[strong_rect_centerpoint(P)]) >= nn - 32 * n);
    CHECK(16 * oracle::depth(P, Family::Disk, P[strong_rect_centerpoint(P)]) >= nn - 32 * n);
    CHECK(4 * oracle::depth(P, Family::Quadrant, P[quadrant_strong_point(P)]) >= nn - 8 * n);
    CHECK(9 * oracle::depth(P, Family::Skyline, P[skyline_strong_point(P)]) >= nn - 18 * n);
    CHECK(8 * oracle::depth(P, Family::SlabBoth, P[strong_rect_centerpoint(P)]) >= 3 * nn - 24 * n);
  }
}

TEST_CASE("property: halfplane counts of the rectangle centerpoint") {
  oracle::Gen g(34);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = static_cast<int>(g.in(1, 40));
    const auto P = g.distinct(n, 2, 1000);
    const int c = strong_rect_centerpoint(P);
    i64 worst = 0;
    for (int axis = 0; axis < 2; ++axis) {
      i64 lo = 0, hi = 0;
      for (const auto& p : P) {
        if (p[axis] < P[c][axis]) ++lo;
        if (p[axis] > P[c][axis]) ++hi;
      }
      worst = std::max({worst, lo, hi});
    }
    CHECK(worst == max_halfplane_count(P, c));
    CHECK(4 * worst <= 3 * n);
  }
}
