#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "selection/constructions.hpp"

using namespace sel;

namespace {

PointSet make(ConstructionKind k, int n, int d = 2) {
  ConstructionSpec s;
  s.kind = k;
  s.n = n;
  s.d = d;
  return generate(s);
}

bool distinct_axes(const PointSet& P) {
  for (int k = 0; k < P.dim(); ++k) {
    std::set<i64> seen;
    for (const auto& p : P)
      if (!seen.insert(p[k]).second) return false;
  }
  return true;
}

// Angle at vertex b of triangle abc is obtuse.
bool obtuse_at(const Point& a, const Point& b, const Point& c) {
  i128 s = 0;
  for (int k = 0; k < 2; ++k) s += static_cast<i128>(a[k] - b[k]) * (c[k] - b[k]);
  return s < 0;
}

}  // namespace

TEST_CASE("small constructions") {
  CHECK(make(ConstructionKind::DecreasingChain, 4).points() == std::vector<Point>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(make(ConstructionKind::IncreasingLine, 3, 3).points() ==
        std::vector<Point>{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  const auto cube = make(ConstructionKind::UniformGrid, 8, 3);
  CHECK(cube.size() == 8);
  std::vector<i64> sum(3, 0);
  for (const auto& p : cube)
    for (int k = 0; k < 3; ++k) sum[static_cast<std::size_t>(k)] += p[k];
  CHECK(oracle::depth(cube, Family::Box, RationalPoint(sum, 8)) == 4);
}

TEST_CASE("circle-type constructions keep coordinates distinct") {
  for (int n : {12, 24, 48}) {
    CHECK(distinct_axes(make(ConstructionKind::Circle, n)));
    CHECK(distinct_axes(make(ConstructionKind::Semicircle, n)));
    CHECK(distinct_axes(make(ConstructionKind::ThreeArc, n)));
  }
}

TEST_CASE("bad construction requests") {
  ConstructionSpec s;
  s.kind = ConstructionKind::ThreeArc;
  s.n = 10;
  CHECK_THROWS_AS(generate(s), InvalidSpec);
  s.kind = ConstructionKind::Circle;
  s.n = 0;
  CHECK_THROWS_AS(generate(s), InvalidSpec);
  s.n = 8;
  s.scale = kCoordLimit;
  CHECK_THROWS_AS(generate(s), InvalidSpec);
  CHECK_THROWS_AS(parse_construction("hexagon"), InvalidSpec);
}

TEST_CASE("three-arc pattern holds for every size up to 48") {
  for (int n = 3; n <= 48; n += 3) {
    const auto P = make(ConstructionKind::ThreeArc, n);
    const auto cls = three_arc_classes(n);
    const auto rep = verify_obtuse_pattern(P, cls);
    CAPTURE(n);
    CHECK(rep.holds);
    // Independent count: obtuse triangles are exactly the listed patterns.
    i64 obtuse = 0;
    bool pattern_ok = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const bool ob = obtuse_at(P[j], P[i], P[k]) || obtuse_at(P[i], P[j], P[k]) || obtuse_at(P[i], P[k], P[j]);
          obtuse += ob;
          std::array<int, 3> c{cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)],
                               cls[static_cast<std::size_t>(k)]};
          int count[3] = {0, 0, 0};
          for (int x : c) ++count[x];
          // AAA..., or two of X+1 with one X: ABB, BCC, CAA.
          bool expected = false;
          for (int x = 0; x < 3; ++x)
            if (count[x] == 3 || (count[x] == 1 && count[(x + 1) % 3] == 2)) expected = true;
          if (ob != expected) pattern_ok = false;
        }
    CHECK(pattern_ok);
    CHECK(obtuse == rep.obtuse_triples);
  }
}

TEST_CASE("obtuse verifier on hand-made sets") {
  const PointSet eq(2, {{0, 0}, {1000, 1}, {500, 866}});
  CHECK(verify_obtuse_pattern(eq, {0, 1, 2}).holds);
  const PointSet flat(2, {{0, 0}, {1, 1}, {2, 2}});
  const auto rep = verify_obtuse_pattern(flat, {0, 0, 0});
  CHECK_FALSE(rep.holds);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("random point sets are reproducible") {
  const auto a = random_point_set(4, 2, 1);
  CHECK(a.points() == random_point_set(4, 2, 1).points());
  CHECK(a.points() != random_point_set(4, 2, 2).points());
  CHECK(distinct_axes(a));

  const auto s = random_point_set(4, 2, 1, true);
  CHECK(s.is_centrally_symmetric());
  CHECK(s[0][0] == -s[1][0]);
  CHECK(s[2][1] == -s[3][1]);

  const auto l = random_point_set(3, 1, 7);
  CHECK(l.dim() == 1);
  CHECK(distinct_axes(l));

  CHECK_THROWS_AS(random_point_set(3, 2, 1, true), InvalidSpec);
}

TEST_CASE("uniform integers stay in range and cover it") {
  std::mt19937_64 rng(9);
  std::set<i64> seen;
  for (int i = 0; i < 2000; ++i) {
    const i64 x = uniform_int(rng, -3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  std::mt19937_64 r1(4), r2(4);
  CHECK(uniform_int(r1, 0, 1'000'000'000'000) == uniform_int(r2, 0, 1'000'000'000'000));
}

TEST_CASE("description names every parameter") {
  ConstructionSpec s;
  s.kind = ConstructionKind::ThreeArc;
  s.n = 12;
  const auto text = s.describe();
  CHECK(text.find("threearc") != std::string::npos);
  CHECK(text.find("n=12") != std::string::npos);
  CHECK(text.find("radius=") != std::string::npos);
}
