#include "selection/depth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "selection/predicates.hpp"

namespace sel {

std::string Violation::describe() const {
  std::ostringstream os;
  if (kind == Kind::SharedCoordinate) {
    os << "shared coordinate on axis " << axis << " among points";
  } else {
    os << "co-circular points";
  }
  for (int i : indices) os << ' ' << i;
  return os.str();
}

namespace {

ValidationReport validate_impl(const PointSet& P, int cocircular_cap) {
  ValidationReport report;
  const int n = P.size();
  for (int axis = 0; axis < P.dim(); ++axis) {
    std::map<i64, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[P[i][axis]].push_back(i);
    for (auto& [value, idx] : groups)
      if (idx.size() > 1)
        report.violations.push_back({Violation::Kind::SharedCoordinate, axis, idx});
  }
  if (P.dim() == 2 && n <= cocircular_cap) {
    report.cocircularity_checked = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            std::vector<std::vector<i128>> rows;
            for (int j : {a, b, c}) {
              const i128 dx = P[j][0] - P[d][0];
              const i128 dy = P[j][1] - P[d][1];
              rows.push_back({dx, dy, dx * dx + dy * dy});
            }
            if (sign_det(rows) == 0)
              report.violations.push_back({Violation::Kind::CoCircular, -1, {a, b, c, d}});
          }
  }
  return report;
}

// Angular order of nonzero integer vectors, starting at the +x direction.
int half_of(i128 x, i128 y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; }

struct Dir {
  i128 x, y;
};

bool angle_less(const Dir& a, const Dir& b) {
  const int ha = half_of(a.x, a.y);
  const int hb = half_of(b.x, b.y);
  if (ha != hb) return ha < hb;
  return sign_cross(a.x, a.y, b.x, b.y) > 0;
}

}  // namespace

ValidationReport validate_general_position(PointSet& P, int cocircular_cap) {
  auto report = validate_impl(P, cocircular_cap);
  if (report.ok()) P.mark_general_position();
  return report;
}

ValidationReport validate_general_position(const PointSet& P, int cocircular_cap) {
  return validate_impl(P, cocircular_cap);
}

QuadrantCounts quadrant_counts(const PointSet& P, const RationalPoint& p) {
  if (P.dim() != 2 || p.dim() != 2) throw DimensionMismatch("quadrant counts need d = 2");
  QuadrantCounts q;
  for (const auto& a : P) {
    const int sx = -p.compare(0, a[0]);  // sign of a.x - p.x
    const int sy = -p.compare(1, a[1]);
    if (sx == 0 && sy == 0) continue;  // p itself
    if (sx == 0 || sy == 0)
      throw CoordinateTie("point " + RationalPoint(a).to_string() +
                          " lies on a grid line through " + p.to_string());
    if (sx < 0 && sy > 0)
      ++q.A;
    else if (sx > 0 && sy > 0)
      ++q.B;
    else if (sx > 0 && sy < 0)
      ++q.C;
    else
      ++q.D;
  }
  return q;
}

i64 depth_from_counts(Family family, const QuadrantCounts& q) {
  const i64 A = q.A, B = q.B, C = q.C, D = q.D;
  switch (family) {
    case Family::Rectangle:
    case Family::Box:
      return A * C + B * D;
    case Family::VSlab:
      return (A + D) * (B + C);
    case Family::HSlab:
      return (A + B) * (C + D);
    case Family::SlabBoth:
      return 2 * (A * C + B * D) + (A + C) * (B + D);
    case Family::Skyline:
      return A * C + B * D + A * B;
    case Family::Quadrant:
      return D * (D - 1) / 2 + D * (A + B + C) + A * C;
    default:
      throw Unsupported("no closed form for " + std::string(family_name(family)));
  }
}

DepthResult depth_brute(const PointSet& P, Family family, const RationalPoint& p) {
  require_family(family, P.dim());
  if (p.dim() != P.dim()) throw DimensionMismatch("query dimension differs from point set");
  const int self = P.index_of(p);
  i64 depth = 0;
  for (int i = 0; i < P.size(); ++i) {
    if (i == self) continue;
    for (int j = i + 1; j < P.size(); ++j) {
      if (j == self) continue;
      depth += containment_count(family, P[i], P[j], p);
    }
  }
  return {p, family, depth, Engine::Brute};
}

i64 disk_depth_sweep(const PointSet& P, const RationalPoint& p) {
  std::vector<Dir> dirs;
  dirs.reserve(static_cast<std::size_t>(P.size()));
  for (const auto& a : P) {
    const auto v = scaled_offset(a, p);
    if (v[0] == 0 && v[1] == 0) continue;
    dirs.push_back({v[0], v[1]});
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  const i64 N = static_cast<i64>(dirs.size());
  auto count_le = [&](const Dir& d) {
    return static_cast<i64>(std::upper_bound(dirs.begin(), dirs.end(), d, angle_less) -
                            dirs.begin());
  };
  auto count_lt = [&](const Dir& d) {
    return static_cast<i64>(std::lower_bound(dirs.begin(), dirs.end(), d, angle_less) -
                            dirs.begin());
  };
  i64 twice = 0;
  for (const auto& v : dirs) {
    // Directions w with dot(v, w) < 0 form the open arc from r to -r (ccw),
    // where r is v rotated by +90 degrees.
    const Dir r{-v.y, v.x};
    const Dir s{v.y, -v.x};
    i64 cnt = count_lt(s) - count_le(r);
    if (half_of(r.x, r.y) == 1) cnt += N;
    twice += cnt;
  }
  return twice / 2;
}

i64 box_depth_orthants(const PointSet& P, const RationalPoint& p) {
  const int d = P.dim();
  if (d > 20) throw Unsupported("orthant counting limited to d <= 20");
  std::vector<i64> counts(std::size_t{1} << d, 0);
  for (const auto& a : P) {
    std::size_t mask = 0;
    bool tie = false;
    for (int k = 0; k < d; ++k) {
      const int s = p.compare(k, a[k]);  // sign of p - a
      if (s == 0) {
        tie = true;
        break;
      }
      if (s < 0) mask |= std::size_t{1} << k;
    }
    // A point sharing a coordinate with p never strictly straddles it there.
    if (!tie) ++counts[mask];
  }
  const std::size_t full = (std::size_t{1} << d) - 1;
  i64 depth = 0;
  for (std::size_t mask = 0; mask <= full; ++mask)
    if (mask < (full ^ mask)) depth += counts[mask] * counts[full ^ mask];
  return depth;
}

DepthResult depth_fast(const PointSet& P, Family family, const RationalPoint& p) {
  require_family(family, P.dim());
  if (p.dim() != P.dim()) throw DimensionMismatch("query dimension differs from point set");
  switch (family) {
    case Family::Box:
    case Family::Interval:
      return {p, family, box_depth_orthants(P, p), Engine::Fast};
    case Family::Disk:
      return {p, family, disk_depth_sweep(P, p), Engine::Fast};
    case Family::Hypersphere:
      if (P.dim() == 2) return {p, family, disk_depth_sweep(P, p), Engine::Fast};
      return depth_brute(P, family, p);
    case Family::DownTriangle:
      return depth_brute(P, family, p);
    default:
      return {p, family, depth_from_counts(family, quadrant_counts(P, p)), Engine::Fast};
  }
}

i64 max_possible_depth(Family family, int n) {
  const i64 pairs = static_cast<i64>(n) * (n - 1) / 2;
  return pairs * objects_per_pair(family);
}

}  // namespace sel
