#include "selection/first_selection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "selection/predicates.hpp"

namespace sel {

namespace {

std::vector<i64> unique_sorted(const PointSet& P, int axis) {
  std::vector<i64> v;
  for (const auto& p : P) v.push_back(p[axis]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Twice a representative coordinate of cell i between the sorted unique
// values (cell 0 lies below everything, cell size() above everything).
i64 twice_cell_coord(const std::vector<i64>& vals, std::size_t i) {
  if (i == 0) return 2 * (vals.front() - 1);
  if (i == vals.size()) return 2 * (vals.back() + 1);
  return vals[i - 1] + vals[i];
}

int rank_in(const std::vector<i64>& vals, i64 x) {
  return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
}

i64 depth_any(const PointSet& P, Family family, const RationalPoint& p) {
  try {
    return depth_fast(P, family, p).depth;
  } catch (const CoordinateTie&) {
    return depth_brute(P, family, p).depth;
  }
}

// All (n+1)^2 grid cells for families whose depth is a function of the
// quadrant counts, in O(n^2) total.
PiercingResult weak_max_planar_cells(const PointSet& P, Family family) {
  const auto xs = unique_sorted(P, 0);
  const auto ys = unique_sorted(P, 1);
  const int n = P.size();
  std::vector<int> rx(static_cast<std::size_t>(n)), ry(static_cast<std::size_t>(n));
  std::vector<int> by_y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rx[static_cast<std::size_t>(i)] = rank_in(xs, P[i][0]);
    ry[static_cast<std::size_t>(i)] = rank_in(ys, P[i][1]);
    by_y[static_cast<std::size_t>(i)] = i;
  }
  std::stable_sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    return ry[static_cast<std::size_t>(a)] < ry[static_cast<std::size_t>(b)];
  });
  i64 best = -1;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i <= xs.size(); ++i) {
    i64 L = 0;
    for (int k = 0; k < n; ++k)
      if (rx[static_cast<std::size_t>(k)] < static_cast<int>(i)) ++L;
    const i64 R = n - L;
    i64 LB = 0, RB = 0;
    std::size_t pos = 0;
    for (std::size_t j = 0; j <= ys.size(); ++j) {
      while (pos < by_y.size() && ry[static_cast<std::size_t>(by_y[pos])] < static_cast<int>(j)) {
        if (rx[static_cast<std::size_t>(by_y[pos])] < static_cast<int>(i))
          ++LB;
        else
          ++RB;
        ++pos;
      }
      QuadrantCounts q{L - LB, R - RB, RB, LB};
      const i64 depth = depth_from_counts(family, q);
      if (depth > best) {
        best = depth;
        bi = i;
        bj = j;
      }
    }
  }
  PiercingResult out;
  out.point = make_rational_point({twice_cell_coord(xs, bi), twice_cell_coord(ys, bj)}, 2);
  out.depth = best;
  out.certificate = "grid cell sweep";
  return out;
}

// Every cell of the grid arrangement in any dimension, by orthant counting.
PiercingResult weak_max_cells(const PointSet& P) {
  const int d = P.dim();
  std::vector<std::vector<i64>> vals;
  for (int k = 0; k < d; ++k) vals.push_back(unique_sorted(P, k));
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  PiercingResult out;
  out.depth = -1;
  while (true) {
    std::vector<i128> num;
    for (int k = 0; k < d; ++k)
      num.push_back(twice_cell_coord(vals[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(k)]));
    const RationalPoint c = make_rational_point(num, 2);
    const i64 depth = box_depth_orthants(P, c);
    if (depth > out.depth) {
      out.depth = depth;
      out.point = c;
    }
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == vals[static_cast<std::size_t>(k)].size()) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
  }
  out.certificate = "grid cell enumeration";
  return out;
}

PiercingResult weak_max_skyline(const PointSet& P) {
  // Lowering the query never loses a skyline, so the bottom row of cells
  // is enough.
  const auto xs = unique_sorted(P, 0);
  const auto ys = unique_sorted(P, 1);
  PiercingResult out;
  out.depth = -1;
  for (std::size_t i = 0; i <= xs.size(); ++i) {
    const RationalPoint c = make_rational_point({twice_cell_coord(xs, i), 2 * (ys.front() - 1)}, 2);
    const i64 depth = depth_any(P, Family::Skyline, c);
    if (depth > out.depth) {
      out.depth = depth;
      out.point = c;
    }
  }
  out.certificate = "bottom cell sweep";
  return out;
}

PiercingResult weak_max_downtri(const PointSet& P) {
  // Depth is constant on the faces of the arrangement of the lines u = a.u,
  // v = a.v and u + v = a.u + a.v; every face touches an integer vertex.
  std::set<i64> us, vs, ws;
  for (const auto& p : P) {
    us.insert(p[0]);
    vs.insert(p[1]);
    ws.insert(p[0] + p[1]);
  }
  std::set<std::pair<i64, i64>> verts;
  for (i64 u : us) {
    for (i64 v : vs) verts.insert({u, v});
    for (i64 w : ws) verts.insert({u, w - u});
  }
  for (i64 v : vs)
    for (i64 w : ws) verts.insert({w - v, v});
  static const int dirs[6][2] = {{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}};
  PiercingResult out;
  out.depth = -1;
  for (const auto& [u, v] : verts) {
    for (const auto& dv : dirs) {
      const RationalPoint c = make_rational_point({7 * static_cast<i128>(u) + dv[0],
                                                   7 * static_cast<i128>(v) + dv[1]}, 7);
      const i64 depth = depth_brute(P, Family::DownTriangle, c).depth;
      if (depth > out.depth) {
        out.depth = depth;
        out.point = c;
      }
    }
  }
  if (out.depth < 0) out.depth = 0;
  out.certificate = "arrangement faces";
  return out;
}

PiercingResult weak_max_hypersphere(const PointSet& P) {
  // Points of P and pair midpoints, each nudged along every axis.
  const int d = P.dim();
  const i64 den = 1 << 10;
  std::vector<std::vector<i128>> bases;
  for (const auto& p : P) {
    std::vector<i128> b;
    for (i64 c : p.coords) b.push_back(static_cast<i128>(c) * den);
    bases.push_back(std::move(b));
  }
  for (int i = 0; i < P.size(); ++i)
    for (int j = i + 1; j < P.size(); ++j) {
      std::vector<i128> b;
      for (int k = 0; k < d; ++k) b.push_back((static_cast<i128>(P[i][k]) + P[j][k]) * (den / 2));
      bases.push_back(std::move(b));
    }
  PiercingResult out;
  out.depth = -1;
  for (const auto& b : bases) {
    for (int k = -1; k < d; ++k) {
      for (int s : {1, -1}) {
        if (k < 0 && s < 0) continue;
        auto num = b;
        if (k >= 0) num[static_cast<std::size_t>(k)] += s;
        const RationalPoint c = make_rational_point(num, den);
        const i64 depth = depth_any(P, Family::Hypersphere, c);
        if (depth > out.depth) {
          out.depth = depth;
          out.point = c;
        }
      }
    }
  }
  out.certificate = "points and midpoints";
  return out;
}

PiercingResult weak_max_disk(const PointSet& P, int cap) {
  const int n = P.size();
  if (n > cap) throw CapExceeded("disk weak search limited to " + std::to_string(cap) + " points");
  using LD = long double;
  struct Circle {
    LD x, y, r;
  };
  std::vector<Circle> circles;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const LD x = (static_cast<LD>(P[i][0]) + P[j][0]) / 2;
      const LD y = (static_cast<LD>(P[i][1]) + P[j][1]) / 2;
      const LD r = std::hypot(static_cast<LD>(P[i][0] - P[j][0]), static_cast<LD>(P[i][1] - P[j][1])) / 2;
      circles.push_back({x, y, r});
    }
  std::vector<std::array<LD, 2>> cand;
  for (const auto& p : P) cand.push_back({static_cast<LD>(p[0]), static_cast<LD>(p[1])});
  for (const auto& c : circles) cand.push_back({c.x, c.y});
  for (std::size_t a = 0; a < circles.size(); ++a)
    for (std::size_t b = a + 1; b < circles.size(); ++b) {
      const auto& c1 = circles[a];
      const auto& c2 = circles[b];
      const LD dx = c2.x - c1.x, dy = c2.y - c1.y;
      const LD dist = std::hypot(dx, dy);
      if (dist == 0 || dist > c1.r + c2.r || dist < std::abs(c1.r - c2.r)) continue;
      const LD along = (c1.r * c1.r - c2.r * c2.r + dist * dist) / (2 * dist);
      const LD h = std::sqrt(std::max<LD>(0, c1.r * c1.r - along * along));
      const LD mx = c1.x + along * dx / dist, my = c1.y + along * dy / dist;
      cand.push_back({mx - h * dy / dist, my + h * dx / dist});
      cand.push_back({mx + h * dy / dist, my - h * dx / dist});
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  LD minsep = std::numeric_limits<LD>::infinity();
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size() && cand[j][0] - cand[i][0] < minsep; ++j)
      minsep = std::min(minsep, std::hypot(cand[j][0] - cand[i][0], cand[j][1] - cand[i][1]));
  i64 D = 8;
  while (D < (i64{1} << 24) && 1.0L / D > minsep / 4) D *= 2;
  PiercingResult out;
  out.depth = -1;
  for (const auto& c : cand) {
    const i128 bx = static_cast<i128>(std::llround(c[0] * D * 4));
    const i128 by = static_cast<i128>(std::llround(c[1] * D * 4));
    for (int sx : {1, -1})
      for (int sy : {1, -1}) {
        const RationalPoint q = make_rational_point({bx + 4 * sx, by + 4 * sy}, 4 * D);
        const i64 depth = disk_depth_sweep(P, q);
        if (depth > out.depth) {
          out.depth = depth;
          out.point = q;
        }
      }
  }
  out.certificate = "disk candidates (lower envelope)";
  return out;
}

std::vector<int> sorted_by_axis(const PointSet& P, int axis) {
  std::vector<int> order(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return P[a][axis] < P[b][axis]; });
  return order;
}

// k-th smallest coordinate on an axis (1-based).
i64 kth_value(const PointSet& P, int axis, int k) {
  const auto order = sorted_by_axis(P, axis);
  return P[order[static_cast<std::size_t>(k - 1)]][axis];
}

int deepest_in(const PointSet& P, Family family, const std::vector<int>& region) {
  int best = -1;
  i64 best_depth = -1;
  for (int i : region) {
    const i64 depth = depth_any(P, family, P[i]);
    if (depth > best_depth) {
      best_depth = depth;
      best = i;
    }
  }
  return best;
}

}  // namespace

PiercingResult weak_max(const PointSet& P, Family family, int disk_cap) {
  require_family(family, P.dim());
  if (P.size() < 2) {
    PiercingResult out;
    out.point = P.empty() ? RationalPoint(std::vector<i64>(static_cast<std::size_t>(P.dim()), 0), 1)
                          : RationalPoint(P[0]);
    out.certificate = "trivial";
    return out;
  }
  PiercingResult out;
  switch (family) {
    case Family::Quadrant: {
      const auto xs = unique_sorted(P, 0);
      const auto ys = unique_sorted(P, 1);
      out.point = RationalPoint(Point{xs.back() + 1, ys.back() + 1});
      out.depth = depth_any(P, family, out.point);
      out.certificate = "beyond the top-right corner";
      return out;
    }
    case Family::Skyline:
      return weak_max_skyline(P);
    case Family::Rectangle:
    case Family::VSlab:
    case Family::HSlab:
    case Family::SlabBoth:
      return weak_max_planar_cells(P, family);
    case Family::Box:
      if (P.dim() == 2) return weak_max_planar_cells(P, Family::Rectangle);
      return weak_max_cells(P);
    case Family::Interval:
      return weak_max_cells(P);
    case Family::DownTriangle:
      return weak_max_downtri(P);
    case Family::Disk:
      return weak_max_disk(P, disk_cap);
    case Family::Hypersphere:
      return weak_max_hypersphere(P);
  }
  throw Unsupported("no weak search for this family");
}

PiercingResult strong_max(const PointSet& P, Family family) {
  require_family(family, P.dim());
  PiercingResult out;
  out.depth = -1;
  for (int i = 0; i < P.size(); ++i) {
    const i64 depth = depth_any(P, family, P[i]);
    if (depth > out.depth) {
      out.depth = depth;
      out.index = i;
    }
  }
  if (out.index >= 0) out.point = P[out.index];
  if (out.depth < 0) out.depth = 0;
  out.certificate = "maximum over P";
  return out;
}

i64 max_halfplane_count(const PointSet& P, int i) {
  i64 left = 0, right = 0, below = 0, above = 0;
  for (int j = 0; j < P.size(); ++j) {
    if (P[j][0] < P[i][0]) ++left;
    if (P[j][0] > P[i][0]) ++right;
    if (P[j][1] < P[i][1]) ++below;
    if (P[j][1] > P[i][1]) ++above;
  }
  return std::max({left, right, below, above});
}

int strong_rect_centerpoint(const PointSet& P) {
  if (P.dim() != 2) throw DimensionMismatch("rectangle centerpoint needs d = 2");
  if (P.empty()) throw NotFound("empty point set");
  // Counts from ranks after one sort per axis.
  const int n = P.size();
  std::vector<i64> xs, ys;
  for (const auto& p : P) {
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  int best = -1;
  i64 best_count = std::numeric_limits<i64>::max();
  for (int i = 0; i < n; ++i) {
    const i64 left = std::lower_bound(xs.begin(), xs.end(), P[i][0]) - xs.begin();
    const i64 right = xs.end() - std::upper_bound(xs.begin(), xs.end(), P[i][0]);
    const i64 below = std::lower_bound(ys.begin(), ys.end(), P[i][1]) - ys.begin();
    const i64 above = ys.end() - std::upper_bound(ys.begin(), ys.end(), P[i][1]);
    const i64 worst = std::max({left, right, below, above});
    if (worst < best_count) {
      best_count = worst;
      best = i;
    }
  }
  if (best_count > (3 * static_cast<i64>(n)) / 4)
    throw NotFound("no member has all halfplane counts within 3n/4; input is not in general position");
  return best;
}

int quadrant_strong_point(const PointSet& P) {
  if (P.dim() != 2) throw DimensionMismatch("quadrant point needs d = 2");
  const int n = P.size();
  if (n < 1) throw NotFound("empty point set");
  const int k = (n + 1) / 2;  // ceil(n/2): the line passes through the k-th point
  const i64 v = kth_value(P, 0, k);
  const i64 h = kth_value(P, 1, k);
  std::vector<int> region;
  for (int i = 0; i < n; ++i)
    if (P[i][0] >= v && P[i][1] >= h) region.push_back(i);
  if (region.empty()) throw NotFound("quadrant region empty; input is not in general position");
  return deepest_in(P, Family::Quadrant, region);
}

int skyline_strong_point(const PointSet& P) {
  if (P.dim() != 2) throw DimensionMismatch("skyline point needs d = 2");
  const int n = P.size();
  if (n < 1) throw NotFound("empty point set");
  const int t = (n + 2) / 3;  // ceil(n/3)
  const i64 v1 = kth_value(P, 0, t);
  const i64 v2 = kth_value(P, 0, n - t + 1);
  auto in_column = [&](int i) { return P[i][0] >= v1 && P[i][0] <= v2; };
  // Horizontal line with ceil(n/3) points strictly above it.
  const i64 h = n - t >= 1 ? kth_value(P, 1, n - t) : kth_value(P, 1, 1);
  std::vector<int> region;
  for (int i = 0; i < n; ++i)
    if (in_column(i) && P[i][1] <= h) region.push_back(i);
  if (region.empty()) {
    // Happens for n = 1 mod 3. Fall back to the full piercing region: at
    // most floor(2n/3) points strictly below.
    const i64 h2 = kth_value(P, 1, n - t + 1);
    for (int i = 0; i < n; ++i)
      if (in_column(i) && P[i][1] <= h2) region.push_back(i);
  }
  if (region.empty()) throw NotFound("skyline region empty; input is not in general position");
  return deepest_in(P, Family::Skyline, region);
}

int symmetric_peel(const PointSet& P) {
  if (P.dim() != 2) throw DimensionMismatch("symmetric peeling needs d = 2");
  if (P.size() % 2 != 0 || P.empty() || !P.is_centrally_symmetric())
    throw NotSymmetric("point set is not symmetric about the origin");
  auto norm2 = [&](int i) { return static_cast<i128>(P[i][0]) * P[i][0] + static_cast<i128>(P[i][1]) * P[i][1]; };
  std::map<std::pair<i64, i64>, int> where;
  for (int i = 0; i < P.size(); ++i) where[{P[i][0], P[i][1]}] = i;
  std::vector<bool> alive(static_cast<std::size_t>(P.size()), true);
  int remaining = P.size();
  int a = -1, b = -1;
  while (remaining > 0) {
    a = -1;
    for (int i = 0; i < P.size(); ++i)
      if (alive[static_cast<std::size_t>(i)] && (a < 0 || norm2(i) > norm2(a))) a = i;
    b = where.at({-P[a][0], -P[a][1]});
    alive[static_cast<std::size_t>(a)] = alive[static_cast<std::size_t>(b)] = false;
    remaining -= 2;
    for (int i = 0; i < P.size(); ++i)
      if (alive[static_cast<std::size_t>(i)] && norm2(i) > norm2(a))
        throw std::logic_error("peeled disk misses a remaining point");
  }
  return std::min(a, b);
}

PiercingResult hypersphere_weak_point(const PointSet& P, std::uint64_t seed, const TukeyCaps& caps) {
  require_family(Family::Hypersphere, P.dim());
  PiercingResult out;
  if (P.is_centrally_symmetric()) {
    out.point = RationalPoint(std::vector<i64>(static_cast<std::size_t>(P.dim()), 0), 1);
    out.certificate = "origin of a symmetric set";
  } else {
    const auto c = tukey_centerpoint(P, seed, caps);
    out.point = c.point;
    out.certificate = "Tukey depth " + std::to_string(c.depth);
  }
  out.depth = depth_any(P, Family::Hypersphere, out.point);
  return out;
}

PiercingResult box_point_recursive(const PointSet& P) {
  const int d = P.dim();
  if (d < 2) throw DimensionMismatch("box recursion needs d >= 2");
  if (d == 2) {
    auto out = weak_max(P, Family::Rectangle);
    out.certificate = "planar rectangle maximum";
    return out;
  }
  std::vector<Point> proj;
  for (const auto& p : P) proj.emplace_back(std::vector<i64>(p.coords.begin(), p.coords.end() - 1));
  PointSet lower;
  try {
    lower = PointSet(d - 1, proj);
  } catch (const InvalidSpec&) {
    throw InvalidSpec("projection merges points; input is not in general position");
  }
  const auto q = box_point_recursive(lower).point;
  // Intervals on the last axis from boxes whose shadows contain q.
  std::vector<std::pair<i64, i64>> intervals;
  for (int i = 0; i < P.size(); ++i)
    for (int j = i + 1; j < P.size(); ++j)
      if (contains(Family::Box, lower[i], lower[j], q))
        intervals.push_back({std::min(P[i][d - 1], P[j][d - 1]), std::max(P[i][d - 1], P[j][d - 1])});
  std::vector<i64> ends;
  for (const auto& [lo, hi] : intervals) {
    ends.push_back(lo);
    ends.push_back(hi);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  i128 twice_t = 0;
  i64 best = 0;
  if (!ends.empty()) {
    std::vector<i64> diff(ends.size() + 1, 0);
    for (const auto& [lo, hi] : intervals) {
      ++diff[static_cast<std::size_t>(rank_in(ends, lo))];
      --diff[static_cast<std::size_t>(rank_in(ends, hi))];
    }
    i64 run = 0;
    std::size_t cell = 0;
    best = -1;
    for (std::size_t c = 0; c + 1 < ends.size(); ++c) {
      run += diff[c];
      if (run > best) {
        best = run;
        cell = c;
      }
    }
    if (best < 0) {
      best = 0;
      twice_t = 2 * static_cast<i128>(ends[0]) - 2;
    } else {
      twice_t = static_cast<i128>(ends[cell]) + ends[cell + 1];
    }
  }
  std::vector<i128> num;
  for (int k = 0; k < d - 1; ++k) num.push_back(static_cast<i128>(q.num[static_cast<std::size_t>(k)]) * 2);
  num.push_back(twice_t * q.den);
  PiercingResult out;
  out.point = make_rational_point(num, static_cast<i128>(q.den) * 2);
  out.depth = box_depth_orthants(P, out.point);
  if (out.depth != best) throw std::logic_error("lifted interval count disagrees with box depth");
  out.certificate = "recursive box construction";
  return out;
}

std::optional<BoundSpec> default_bound(Family family, Variant variant, int d) {
  BoundSpec b;
  b.family = family;
  b.variant = variant;
  b.direction = BoundDirection::Lower;
  b.finder = Finder::Constructive;
  auto set = [&](Rational c, i64 s) {
    b.coefficient = c;
    b.slack = s;
    return std::optional<BoundSpec>(b);
  };
  const bool strong = variant == Variant::Strong;
  switch (family) {
    case Family::Rectangle:
      return strong ? set(Rational(1, 16), 2) : set(Rational(1, 8), 2);
    case Family::Quadrant:
      // Weak: C(n,2) = n^2/2 - n/2.
      return strong ? set(Rational(1, 4), 2) : set(Rational(1, 2), 1);
    case Family::SlabBoth:
      return strong ? set(Rational(3, 8), 3) : set(Rational(1, 4), 1);
    case Family::Skyline:
      return strong ? set(Rational(1, 9), 2) : set(Rational(1, 4), 1);
    case Family::Disk:
      return strong ? set(Rational(1, 16), 2) : set(Rational(1, 6), 1);
    case Family::Hypersphere:
      if (strong) return std::nullopt;
      return set(Rational(1, 2 * (d + 1)), 1);
    case Family::Box: {
      if (strong || d < 2 || d > 5) return std::nullopt;
      return set(Rational(1, (i64{1} << ((1 << d) - 1))), 2);
    }
    default:
      return std::nullopt;
  }
}

Rational required_depth(const BoundSpec& spec, int n) {
  const Rational base = spec.coefficient * Rational(static_cast<i64>(n) * n);
  const Rational lin(spec.slack * n);
  return spec.direction == BoundDirection::Lower ? base - lin : base + lin;
}

BoundCheck verify_first_selection(const PointSet& P, const BoundSpec& spec, std::uint64_t seed) {
  require_family(spec.family, P.dim());
  BoundCheck out;
  out.family = spec.family;
  out.variant = spec.variant;
  out.n = P.size();
  out.d = P.dim();
  out.coefficient = spec.coefficient;
  out.slack = spec.slack;
  out.direction = spec.direction;
  out.seed = seed;
  out.required = required_depth(spec, P.size());
  PiercingResult r;
  if (P.size() < 2) {
    r = P.empty() ? PiercingResult{} : strong_max(P, spec.family);
  } else if (spec.finder == Finder::Max) {
    r = spec.variant == Variant::Strong ? strong_max(P, spec.family) : weak_max(P, spec.family);
  } else if (spec.variant == Variant::Strong) {
    int idx = -1;
    std::string how;
    switch (spec.family) {
      case Family::Rectangle:
      case Family::SlabBoth:
        idx = strong_rect_centerpoint(P);
        how = "strong rect-centerpoint";
        break;
      case Family::Disk:
        if (P.is_centrally_symmetric()) {
          idx = symmetric_peel(P);
          how = "symmetric peeling";
        } else {
          idx = strong_rect_centerpoint(P);
          how = "strong rect-centerpoint";
        }
        break;
      case Family::Quadrant:
        idx = quadrant_strong_point(P);
        how = "quadrant construction";
        break;
      case Family::Skyline:
        idx = skyline_strong_point(P);
        how = "skyline construction";
        break;
      default:
        break;
    }
    if (idx < 0) {
      r = strong_max(P, spec.family);
    } else {
      r.index = idx;
      r.point = P[idx];
      r.depth = depth_any(P, spec.family, r.point);
      r.certificate = how;
    }
  } else {
    switch (spec.family) {
      case Family::Disk:
      case Family::Hypersphere:
        r = hypersphere_weak_point(P, seed, spec.caps);
        break;
      case Family::Box:
        r = box_point_recursive(P);
        break;
      default:
        r = weak_max(P, spec.family);
    }
  }
  out.observed = r.depth;
  out.point = r.point;
  out.certificate = r.certificate;
  const Rational obs(r.depth);
  out.holds = spec.direction == BoundDirection::Lower ? obs >= out.required : obs <= out.required;
  return out;
}

}  // namespace sel
