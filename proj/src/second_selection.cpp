#include "selection/second_selection.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "selection/constructions.hpp"

namespace sel {

namespace {

std::vector<i64> sorted_axis(const PointSet& P, int axis) {
  std::vector<i64> v;
  for (const auto& p : P) v.push_back(p[axis]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int rank_of(const std::vector<i64>& v, i64 x) {
  return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}

// Lexicographic pair number t -> (i, j), i < j, among n points.
std::pair<int, int> decode_pair(i64 t, int n) {
  int lo = 0, hi = n - 1;
  auto start = [n](i64 i) { return i * (2 * static_cast<i64>(n) - i - 1) / 2; };
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (start(mid) <= t)
      lo = mid;
    else
      hi = mid - 1;
  }
  return {lo, static_cast<int>(lo + 1 + (t - start(lo)))};
}

struct RankBox {
  int x0, x1, y0, y1;
};

RankBox rank_box(const PointSet& P, const std::vector<i64>& xs, const std::vector<i64>& ys,
                 const std::pair<int, int>& pr) {
  const auto& a = P[pr.first];
  const auto& b = P[pr.second];
  return {rank_of(xs, std::min(a[0], b[0])), rank_of(xs, std::max(a[0], b[0])),
          rank_of(ys, std::min(a[1], b[1])), rank_of(ys, std::max(a[1], b[1]))};
}

void require_planar(const PointSet& P) {
  if (P.dim() != 2) throw DimensionMismatch("rectangle second selection needs d = 2");
}

}  // namespace

InducedSubset sample_subset(const PointSet& P, Family family, i64 m, std::uint64_t seed) {
  const i64 n = P.size();
  const i64 total = n * (n - 1) / 2;
  if (m < 0 || m > total) throw MTooLarge("m = " + std::to_string(m) + " exceeds C(n,2) = " + std::to_string(total));
  // Floyd's sampling of m distinct pair numbers.
  std::mt19937_64 rng(seed);
  std::set<i64> chosen;
  for (i64 j = total - m; j < total; ++j) {
    const i64 t = uniform_int(rng, 0, j);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  InducedSubset S;
  S.family = family;
  for (i64 t : chosen) S.pairs.push_back(decode_pair(t, static_cast<int>(n)));
  return S;
}

InducedSubset read_subset(std::istream& in, Family family) {
  InducedSubset S;
  S.family = family;
  std::string line;
  i64 m = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (m < 0) {
      std::string tag;
      if (!(ls >> tag >> m) || tag != "pairs" || m < 0) throw ParseError("subset file must start with 'pairs <m>'");
      continue;
    }
    int i, j;
    if (!(ls >> i >> j)) throw ParseError("bad pair line: " + line);
    if (i == j) throw ParseError("pair with equal indices");
    S.pairs.push_back({std::min(i, j), std::max(i, j)});
  }
  if (m < 0) throw ParseError("missing 'pairs' header");
  if (S.m() != m) throw ParseError("pair count differs from header");
  return S;
}

void write_subset(std::ostream& out, const InducedSubset& S) {
  out << "pairs " << S.m() << '\n';
  for (const auto& [i, j] : S.pairs) out << i << ' ' << j << '\n';
}

bool interval_lower_bound_holds(i64 max, i64 m, i64 n) {
  const i128 N = n;
  return 2 * N * N * max >= static_cast<i128>(m) * m + 3 * static_cast<i128>(m) * N - 2 * N * N;
}

IntervalProfile interval_depth_profile(const PointSet& P, const InducedSubset& C) {
  if (P.dim() != 1) throw DimensionMismatch("interval profiles need d = 1");
  const auto xs = sorted_axis(P, 0);
  std::vector<i64> diff(xs.size() + 1, 0);
  for (const auto& [i, j] : C.pairs) {
    const int lo = rank_of(xs, std::min(P[i][0], P[j][0]));
    const int hi = rank_of(xs, std::max(P[i][0], P[j][0]));
    ++diff[static_cast<std::size_t>(lo)];
    --diff[static_cast<std::size_t>(hi) + 1];
  }
  std::vector<i64> by_rank(xs.size(), 0);
  i64 run = 0;
  for (std::size_t r = 0; r < xs.size(); ++r) {
    run += diff[r];
    by_rank[r] = run;
  }
  IntervalProfile out;
  for (int i = 0; i < P.size(); ++i) {
    const i64 c = by_rank[static_cast<std::size_t>(rank_of(xs, P[i][0]))];
    out.count.push_back(c);
    if (out.argmax < 0 || c > out.max) {
      out.max = c;
      out.argmax = i;
    }
  }
  out.meets_lower_bound = interval_lower_bound_holds(out.max, C.m(), P.size());
  return out;
}

IntervalConstruction gen_interval_upper(int n, i64 m) {
  if (n < 1 || m < 0) throw InvalidRange("need n >= 1 and m >= 0");
  const long double limit = static_cast<long double>(n) * n * (std::sqrt(2.0L) - 1) -
                            static_cast<long double>(n) / std::sqrt(2.0L);
  if (static_cast<long double>(m) > limit) throw InvalidRange("m outside the construction's range");
  // k = ceil(sqrt(2) m / n), the least k with k^2 n^2 >= 2 m^2.
  i64 k = 0;
  while (static_cast<i128>(k) * k * n * n < 2 * static_cast<i128>(m) * m) ++k;
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(Point{i});
  IntervalConstruction out;
  out.points = PointSet(1, std::move(pts));
  out.k = k;
  out.subset.family = Family::Interval;
  // Shortest intervals first, left to right within a length.
  for (i64 len = 1; len <= k && out.subset.m() < m; ++len)
    for (int i = 0; i + len < n && out.subset.m() < m; ++i)
      out.subset.pairs.push_back({i, static_cast<int>(i + len)});
  if (out.subset.m() < m) throw InvalidRange("not enough short intervals for m");
  return out;
}

GridDepthMap grid_depth_map(const PointSet& P, const InducedSubset& S) {
  require_planar(P);
  GridDepthMap g;
  g.xs = sorted_axis(P, 0);
  g.ys = sorted_axis(P, 1);
  const std::size_t X = g.xs.size(), Y = g.ys.size();
  std::vector<i64> diff((X + 1) * (Y + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> i64& { return diff[i * (Y + 1) + j]; };
  for (const auto& pr : S.pairs) {
    const auto b = rank_box(P, g.xs, g.ys, pr);
    const auto x0 = static_cast<std::size_t>(b.x0), x1 = static_cast<std::size_t>(b.x1) + 1;
    const auto y0 = static_cast<std::size_t>(b.y0), y1 = static_cast<std::size_t>(b.y1) + 1;
    ++at(x0, y0);
    --at(x1, y0);
    --at(x0, y1);
    ++at(x1, y1);
  }
  for (std::size_t i = 0; i <= X; ++i)
    for (std::size_t j = 0; j <= Y; ++j) {
      if (i > 0) at(i, j) += at(i - 1, j);
      if (j > 0) at(i, j) += at(i, j - 1);
      if (i > 0 && j > 0) at(i, j) -= at(i - 1, j - 1);
    }
  g.depth.assign(X * Y, 0);
  g.max = -1;
  for (std::size_t i = 0; i < X; ++i)
    for (std::size_t j = 0; j < Y; ++j) {
      const i64 v = at(i, j);
      g.depth[i * Y + j] = v;
      g.total += v;
      if (v > g.max) {
        g.max = v;
        g.gx = static_cast<int>(i);
        g.gy = static_cast<int>(j);
      }
    }
  if (g.max < 0) g.max = 0;
  const i128 n = P.size();
  const i128 m = S.m();
  g.meets_cubic_bound = 24 * n * n * n * n * g.max >= m * m * m;
  return g;
}

void GridDepthMap::write_csv(std::ostream& out) const {
  out << "gx,gy,depth\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      out << xs[i] << ',' << ys[j] << ',' << depth[i * ys.size() + j] << '\n';
}

std::vector<i64> rectangle_grid_counts(const PointSet& P, const InducedSubset& S) {
  require_planar(P);
  const auto xs = sorted_axis(P, 0);
  const auto ys = sorted_axis(P, 1);
  std::vector<i64> out;
  for (const auto& pr : S.pairs) {
    const auto b = rank_box(P, xs, ys, pr);
    out.push_back(static_cast<i64>(b.x1 - b.x0 + 1) * (b.y1 - b.y0 + 1));
  }
  return out;
}

PartitionX partition_rectangles(const PointSet& P, const InducedSubset& S) {
  require_planar(P);
  PartitionX X;
  X.right.resize(static_cast<std::size_t>(P.size()));
  X.left.resize(static_cast<std::size_t>(P.size()));
  std::vector<int> partner(S.pairs.size());
  for (std::size_t r = 0; r < S.pairs.size(); ++r) {
    auto [a, b] = S.pairs[r];
    if (P[a][1] > P[b][1]) std::swap(a, b);  // a is the lower endpoint
    partner[r] = b;
    auto& part = P[b][0] > P[a][0] ? X.right : X.left;
    part[static_cast<std::size_t>(a)].push_back(static_cast<int>(r));
  }
  auto by_partner_y = [&](int r1, int r2) {
    const i64 y1 = P[partner[static_cast<std::size_t>(r1)]][1];
    const i64 y2 = P[partner[static_cast<std::size_t>(r2)]][1];
    if (y1 != y2) return y1 > y2;
    return r1 < r2;
  };
  for (auto& v : X.right) std::sort(v.begin(), v.end(), by_partner_y);
  for (auto& v : X.left) std::sort(v.begin(), v.end(), by_partner_y);
  return X;
}

CubicReport check_cubic_lemma(const PointSet& P, const InducedSubset& S) {
  const auto J = rectangle_grid_counts(P, S);
  const auto X = partition_rectangles(P, S);
  CubicReport rep;
  for (int i = 0; i < P.size(); ++i) {
    for (bool right : {true, false}) {
      const auto& part = right ? X.right[static_cast<std::size_t>(i)] : X.left[static_cast<std::size_t>(i)];
      if (part.empty()) continue;
      CubicEntry e;
      e.base = i;
      e.right_side = right;
      e.m = static_cast<i64>(part.size());
      for (int r : part) e.sum_j += J[static_cast<std::size_t>(r)];
      e.holds = 6 * static_cast<i128>(e.sum_j) >= static_cast<i128>(e.m) * e.m * e.m;
      rep.holds = rep.holds && e.holds;
      rep.entries.push_back(e);
    }
  }
  return rep;
}

bool interval_partition_sanity(const PointSet& P, const InducedSubset& C) {
  if (P.dim() != 1) throw DimensionMismatch("interval partitions need d = 1");
  const auto xs = sorted_axis(P, 0);
  std::vector<std::vector<std::pair<int, int>>> groups(xs.size());
  for (const auto& [i, j] : C.pairs) {
    const int lo = rank_of(xs, std::min(P[i][0], P[j][0]));
    const int hi = rank_of(xs, std::max(P[i][0], P[j][0]));
    groups[static_cast<std::size_t>(lo)].push_back({hi, lo});
  }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    for (std::size_t j = 0; j < g.size(); ++j) {
      const i64 inside = g[j].first - g[j].second + 1;
      if (inside < static_cast<i64>(j) + 2) return false;
    }
  }
  return true;
}

}  // namespace sel
