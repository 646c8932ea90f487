#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "selection/tukey.hpp"

using namespace sel;

namespace {

using Big = boost::multiprecision::cpp_int;
using V = std::vector<Big>;

std::vector<V> offsets(const PointSet& P, const RationalPoint& c) {
  std::vector<V> out;
  for (const auto& p : P) {
    V v;
    for (int k = 0; k < P.dim(); ++k) v.push_back(Big(p[k]) * c.den - c.num[static_cast<std::size_t>(k)]);
    out.push_back(v);
  }
  return out;
}

Big dot(const V& a, const V& b) {
  Big s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

V cross(const V& a, const V& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int sgn(const Big& x) { return x.sign(); }

// Closed count for the direction w + e1 * a + e2 * b with e2 << e1 << 1.
i64 closed_count(const std::vector<V>& vs, const V& w, const V& a, const V& b) {
  i64 count = 0;
  for (const auto& v : vs) {
    int s = sgn(dot(w, v));
    if (s == 0) s = sgn(dot(a, v));
    if (s == 0 && !b.empty()) s = sgn(dot(b, v));
    if (s >= 0) ++count;
  }
  return count;
}

// Every open cell of the arrangement of great circles v-perp touches a vertex;
// visit the cells around each vertex.
i64 tukey2(const PointSet& P, const RationalPoint& c) {
  const auto vs = offsets(P, c);
  i64 best = P.size();
  for (const auto& v : vs) {
    if (v[0] == 0 && v[1] == 0) continue;
    const V w{Big(-v[1]), v[0]};
    for (int s : {1, -1}) {
      const V a{Big(s * v[0]), Big(s * v[1])};
      best = std::min(best, closed_count(vs, w, a, {}));
      best = std::min(best, closed_count(vs, V{Big(-w[0]), Big(-w[1])}, a, {}));
    }
  }
  return best;
}

i64 tukey3(const PointSet& P, const RationalPoint& c) {
  const auto vs = offsets(P, c);
  i64 best = P.size();
  // Rank-one arrangements have no vertices: the two hemispheres of +-v.
  for (const auto& v : vs)
    for (int s : {1, -1}) best = std::min(best, closed_count(vs, V{s * v[0], s * v[1], s * v[2]}, {}, {}));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const V w = cross(vs[i], vs[j]);
      if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
      const V a = cross(vs[j], w), b = cross(vs[i], w);
      for (int sw : {1, -1})
        for (int sa : {1, -1})
          for (int sb : {1, -1}) {
            const V ww{Big(sw * w[0]), Big(sw * w[1]), Big(sw * w[2])};
            const V aa{Big(sa * a[0]), Big(sa * a[1]), Big(sa * a[2])};
            const V bb{Big(sb * b[0]), Big(sb * b[1]), Big(sb * b[2])};
            best = std::min(best, closed_count(vs, ww, aa, bb));
          }
    }
  return best;
}

}  // namespace

TEST_CASE("centerpoint of a triangle") {
  const PointSet tri(2, {{0, 0}, {6, 0}, {2, 5}});
  const auto c = tukey_centerpoint(tri);
  CHECK(c.required == 1);
  CHECK(c.depth >= 1);
  CHECK(tukey2(tri, c.point) == c.depth);
}

TEST_CASE("centerpoint of twelve random points") {
  oracle::Gen g(12);
  const auto P = g.distinct(12, 2, 1000);
  const auto c = tukey_centerpoint(P, 3);
  CHECK(c.required == 4);
  CHECK(c.depth >= 4);
  CHECK(tukey2(P, c.point) == c.depth);
}

TEST_CASE("diagonal crossing of a convex quadrilateral") {
  const PointSet quad(2, {{0, 0}, {4, 1}, {5, 5}, {1, 4}});
  // Diagonals (0,0)-(5,5) and (4,1)-(1,4) cross at (5/2, 5/2).
  CHECK(tukey_depth(quad, RationalPoint({5, 5}, 2)) == 2);
  CHECK(tukey_centerpoint(quad).depth >= 2);
}

TEST_CASE("one-dimensional depth") {
  const PointSet line(1, {{1}, {2}, {3}, {4}, {5}});
  CHECK(tukey_depth(line, Point{3}) == 3);
  CHECK(tukey_depth(line, RationalPoint({3}, 2)) == 1);
  CHECK(tukey_depth(line, Point{9}) == 0);
}

TEST_CASE("property: planar depth matches the arrangement oracle") {
  oracle::Gen g(201);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(g.in(1, 20));
    const auto P = g.distinct(n, 2, 80);
    const RationalPoint c = trial % 3 == 0 ? RationalPoint(P[0]) : g.half_point(2, 80);
    CAPTURE(trial);
    CHECK(tukey_depth(P, c) == tukey2(P, c));
  }
}

TEST_CASE("property: spatial depth matches the arrangement oracle") {
  oracle::Gen g(202);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(g.in(2, 12));
    const auto P = g.distinct(n, 3, 60);
    const RationalPoint c = trial % 4 == 0 ? RationalPoint(P[1]) : g.half_point(3, 60);
    CAPTURE(trial);
    CHECK(tukey_depth(P, c) == tukey3(P, c));
  }
}

TEST_CASE("property: centerpoints are certified in dimensions two to four") {
  oracle::Gen g(203);
  for (int trial = 0; trial < 90; ++trial) {
    const int d = 2 + trial % 3;
    const int n = static_cast<int>(g.in(d + 1, 14));
    const auto P = g.distinct(n, d, 300);
    const auto c = tukey_centerpoint(P, static_cast<std::uint64_t>(trial));
    CAPTURE(trial);
    CHECK(c.required == (n + d) / (d + 1));
    CHECK(c.depth >= c.required);
    CHECK(tukey_depth(P, c.point) == c.depth);
    if (d == 2) CHECK(tukey2(P, c.point) == c.depth);
    if (d == 3) CHECK(tukey3(P, c.point) >= c.depth);
  }
}

TEST_CASE("d + 2 points use the exact Radon point") {
  oracle::Gen g(204);
  for (int trial = 0; trial < 20; ++trial) {
    const auto P = g.distinct(5, 3, 100);
    const auto c = tukey_centerpoint(P, 1);
    CHECK(c.depth >= 2);
    CHECK(tukey3(P, c.point) >= 2);
  }
}

TEST_CASE("caps and unsupported dimensions") {
  oracle::Gen g(205);
  CHECK_THROWS_AS(tukey_centerpoint(g.distinct(30, 3, 1000)), CapExceeded);
  CHECK_NOTHROW(tukey_centerpoint(g.distinct(30, 3, 1000), 0, TukeyCaps{60, 48, 16}));
  CHECK_THROWS_AS(tukey_centerpoint(g.distinct(6, 5, 100)), Unsupported);
}
