#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "selection/constructions.hpp"
#include "selection/first_selection.hpp"
#include "selection/second_selection.hpp"

using namespace sel;

namespace {

PointSet line(std::vector<i64> xs) {
  std::vector<Point> pts;
  for (i64 x : xs) pts.push_back(Point{x});
  return PointSet(1, std::move(pts));
}

InducedSubset all_pairs(int n, Family f) {
  InducedSubset S;
  S.family = f;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) S.pairs.push_back({i, j});
  return S;
}

bool in_closed(i64 v, i64 a, i64 b) { return std::min(a, b) <= v && v <= std::max(a, b); }

i64 brute_interval(const PointSet& P, const InducedSubset& C, int idx) {
  i64 c = 0;
  for (const auto& [i, j] : C.pairs) c += in_closed(P[idx][0], P[i][0], P[j][0]);
  return c;
}

i64 brute_rect(const PointSet& P, const InducedSubset& S, i64 x, i64 y) {
  i64 c = 0;
  for (const auto& [i, j] : S.pairs) c += in_closed(x, P[i][0], P[j][0]) && in_closed(y, P[i][1], P[j][1]);
  return c;
}

}  // namespace

TEST_CASE("pair sampling") {
  const auto P = line({1, 2, 3, 4});
  auto S = sample_subset(P, Family::Interval, 6, 3);
  CHECK(S.pairs == all_pairs(4, Family::Interval).pairs);
  CHECK(sample_subset(P, Family::Interval, 2, 5).pairs == sample_subset(P, Family::Interval, 2, 5).pairs);
  CHECK(sample_subset(P, Family::Interval, 0, 5).m() == 0);
  CHECK_THROWS_AS(sample_subset(P, Family::Interval, 7, 5), MTooLarge);

  const auto Q = random_point_set(30, 2, 8);
  const auto T = sample_subset(Q, Family::Rectangle, 200, 11);
  const std::set<std::pair<int, int>> uniq(T.pairs.begin(), T.pairs.end());
  CHECK(uniq.size() == 200);
  CHECK(std::is_sorted(T.pairs.begin(), T.pairs.end()));
  for (const auto& [i, j] : T.pairs) {
    CHECK(0 <= i);
    CHECK(i < j);
    CHECK(j < 30);
  }
}

TEST_CASE("subset files round trip") {
  const auto P = random_point_set(10, 2, 1);
  const auto S = sample_subset(P, Family::Rectangle, 17, 2);
  std::stringstream ss;
  write_subset(ss, S);
  CHECK(read_subset(ss, Family::Rectangle).pairs == S.pairs);

  std::istringstream bad1("pairs 2\n0 1\n");
  CHECK_THROWS_AS(read_subset(bad1, Family::Rectangle), ParseError);
  std::istringstream bad2("0 1\n");
  CHECK_THROWS_AS(read_subset(bad2, Family::Rectangle), ParseError);
  std::istringstream bad3("pairs 1\n3 3\n");
  CHECK_THROWS_AS(read_subset(bad3, Family::Rectangle), ParseError);
}

TEST_CASE("interval profile on four points") {
  const auto P = line({1, 2, 3, 4});
  const auto prof = interval_depth_profile(P, all_pairs(4, Family::Interval));
  CHECK(prof.count == std::vector<i64>{3, 5, 5, 3});
  CHECK(prof.max == 5);
  CHECK(prof.argmax == 1);
  CHECK(prof.meets_lower_bound);

  InducedSubset one;
  one.pairs = {{0, 1}};
  CHECK(interval_depth_profile(P, one).count == std::vector<i64>{1, 1, 0, 0});
  CHECK_THROWS_AS(interval_depth_profile(random_point_set(4, 2, 1), one), DimensionMismatch);
}

TEST_CASE("interval bound arithmetic") {
  // max >= m^2/(2n^2) + 3m/(2n) - 1, checked against exact rationals.
  for (i64 n = 1; n <= 12; ++n)
    for (i64 m = 0; m <= n * (n - 1) / 2; ++m)
      for (i64 mx = 0; mx <= m; ++mx) {
        const Rational rhs = Rational(m * m, 2 * n * n) + Rational(3 * m, 2 * n) - 1;
        CHECK(interval_lower_bound_holds(mx, m, n) == (Rational(mx) >= rhs));
      }
}

TEST_CASE("short-interval construction") {
  auto c = gen_interval_upper(8, 8);
  CHECK(c.k == 2);
  CHECK(c.subset.m() == 8);
  CHECK(interval_depth_profile(c.points, c.subset).max == 3);

  c = gen_interval_upper(4, 3);
  CHECK(c.k == 2);
  CHECK(interval_depth_profile(c.points, c.subset).max == 2);

  c = gen_interval_upper(5, 0);
  CHECK(c.k == 0);
  CHECK(c.subset.m() == 0);

  CHECK_THROWS_AS(gen_interval_upper(4, 6), InvalidRange);
  CHECK_THROWS_AS(gen_interval_upper(0, 1), InvalidRange);
}

TEST_CASE("construction stays within a constant of the lower bound") {
  for (int n : {16, 32, 64})
    for (i64 m : {i64{n}, 2 * i64{n}, 4 * i64{n}}) {
      const auto c = gen_interval_upper(n, m);
      const auto prof = interval_depth_profile(c.points, c.subset);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(prof.meets_lower_bound);
      CHECK(prof.max <= 2 * c.k * c.k + 2);
    }
}

TEST_CASE("grid map of a full box") {
  const PointSet P(2, {{0, 0}, {3, 3}, {1, 2}, {2, 1}});
  InducedSubset S;
  S.family = Family::Rectangle;
  S.pairs = {{0, 1}};
  const auto g = grid_depth_map(P, S);
  CHECK(g.total == 16);
  CHECK(g.max == 1);
  CHECK(rectangle_grid_counts(P, S) == std::vector<i64>{16});
  CHECK_THROWS_AS(grid_depth_map(line({1, 2}), S), DimensionMismatch);
}

TEST_CASE("all pairs meet the cubic bound") {
  const auto P = random_point_set(24, 2, 5);
  const auto g = grid_depth_map(P, all_pairs(24, Family::Rectangle));
  CHECK(g.meets_cubic_bound);
  CHECK(g.max == brute_rect(P, all_pairs(24, Family::Rectangle), g.xs[static_cast<std::size_t>(g.gx)],
                            g.ys[static_cast<std::size_t>(g.gy)]));
}

TEST_CASE("partition of an increasing chain") {
  const PointSet P(2, {{0, 0}, {1, 1}, {2, 2}});
  const auto X = partition_rectangles(P, all_pairs(3, Family::Rectangle));
  CHECK(X.right[0].size() == 2);
  CHECK(X.right[1].size() == 1);
  CHECK(X.right[2].empty());
  for (const auto& v : X.left) CHECK(v.empty());
  // Ordered by decreasing partner y: pair (0,2) before (0,1).
  CHECK(X.right[0] == std::vector<int>{1, 0});
}

TEST_CASE("cubic lemma base cases") {
  const PointSet P(2, {{0, 0}, {1, 1}});
  InducedSubset S;
  S.pairs = {{0, 1}};
  const auto rep = check_cubic_lemma(P, S);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].m == 1);
  CHECK(rep.entries[0].sum_j == 4);
  CHECK(rep.holds);

  InducedSubset none;
  CHECK(check_cubic_lemma(P, none).entries.empty());
  CHECK(check_cubic_lemma(P, none).holds);
}

TEST_CASE("property: interval profiles match brute force") {
  oracle::Gen g(61);
  for (int t = 0; t < 150; ++t) {
    const int n = static_cast<int>(g.in(2, 30));
    const auto P = random_point_set(n, 1, g.seed());
    const auto C = sample_subset(P, Family::Interval, g.in(0, n * (n - 1) / 2), g.seed());
    const auto prof = interval_depth_profile(P, C);
    i64 best = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(prof.count[static_cast<std::size_t>(i)] == brute_interval(P, C, i));
      best = std::max(best, prof.count[static_cast<std::size_t>(i)]);
    }
    CHECK(prof.max == best);
    CHECK(prof.meets_lower_bound);
    CHECK(interval_partition_sanity(P, C));
  }
}

TEST_CASE("property: grid maps, J counts and the cubic lemma") {
  oracle::Gen g(62);
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(g.in(2, 16));
    const auto P = random_point_set(n, 2, g.seed());
    const auto S = sample_subset(P, Family::Rectangle, g.in(0, n * (n - 1) / 2), g.seed());
    const auto gm = grid_depth_map(P, S);
    i64 total = 0, best = 0;
    for (std::size_t i = 0; i < gm.xs.size(); ++i)
      for (std::size_t j = 0; j < gm.ys.size(); ++j) {
        const i64 v = brute_rect(P, S, gm.xs[i], gm.ys[j]);
        CHECK(gm.at(static_cast<int>(i), static_cast<int>(j)) == v);
        total += v;
        best = std::max(best, v);
      }
    CHECK(gm.max == best);
    const auto J = rectangle_grid_counts(P, S);
    i64 jsum = 0;
    for (i64 v : J) jsum += v;
    CHECK(jsum == total);  // double counting
    const auto rep = check_cubic_lemma(P, S);
    CHECK(rep.holds);
    i64 covered = 0;
    for (const auto& e : rep.entries) covered += e.m;
    CHECK(covered == S.m());
  }
}
