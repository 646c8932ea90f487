#include "selection/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace sel {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

const std::array<std::pair<ConstructionKind, const char*>, 8> kKinds{{
    {ConstructionKind::Circle, "circle"},
    {ConstructionKind::Semicircle, "semicircle"},
    {ConstructionKind::DecreasingChain, "chain"},
    {ConstructionKind::IncreasingLine, "line"},
    {ConstructionKind::UniformGrid, "grid"},
    {ConstructionKind::ThreeArc, "threearc"},
    {ConstructionKind::RandomGeneral, "random"},
    {ConstructionKind::RandomSymmetric, "symmetric"},
}};

// Rounds the ideal coordinates and then, per axis, walks the points in ideal
// order forcing strictly increasing integers. Order along every axis is the
// ideal one and no two points share a coordinate.
std::vector<Point> realize(const std::vector<std::vector<long double>>& ideal) {
  const std::size_t n = ideal.size();
  if (n == 0) return {};
  const std::size_t d = ideal[0].size();
  std::vector<Point> pts(n, Point(std::vector<i64>(d, 0)));
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ideal[a][k] < ideal[b][k]; });
    bool first = true;
    i64 prev = 0;
    for (std::size_t idx : order) {
      i64 v = std::llround(ideal[idx][k]);
      if (!first && v <= prev) v = prev + 1;
      pts[idx].coords[k] = v;
      prev = v;
      first = false;
    }
  }
  return pts;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

PointSet make_circle(const ConstructionSpec& s, bool semicircle) {
  require(s.d == 2, "circle constructions are planar");
  std::vector<std::vector<long double>> ideal;
  const long double R = static_cast<long double>(s.scale);
  for (int i = 0; i < s.n; ++i) {
    // Quarter-step angular offset keeps every point off the symmetry axes.
    const long double theta = semicircle ? kPi * (i + 0.25L) / s.n
                                         : 2 * kPi * i / s.n + kPi / (2 * s.n);
    ideal.push_back({R * std::cos(theta), R * std::sin(theta)});
  }
  return PointSet(2, realize(ideal));
}

PointSet make_three_arc(const ConstructionSpec& s) {
  require(s.d == 2, "three-arc construction is planar");
  require(s.n % 3 == 0, "three-arc construction needs 3 | n");
  const auto& deg = s.arcs.vertex_deg;
  require(std::abs(deg[0] + deg[1] + deg[2] - 180.0) < 1e-9, "vertex angles must sum to 180");
  require(s.arcs.radius >= 1 && s.arcs.radius <= kMaxCoord / 2, "arc radius out of range");
  const long double R = static_cast<long double>(s.arcs.radius);
  // Vertices on the circumcircle: the arc opposite a vertex spans twice its angle.
  const long double a0 = kPi / 2;
  const long double a1 = a0 + 2 * deg[2] * kPi / 180;
  const long double a2 = a1 + 2 * deg[0] * kPi / 180;
  const std::array<std::array<long double, 2>, 3> V{{
      {R * std::cos(a0), R * std::sin(a0)},
      {R * std::cos(a1), R * std::sin(a1)},
      {R * std::cos(a2), R * std::sin(a2)},
  }};
  const int k = s.n / 3;
  std::vector<std::vector<long double>> ideal;
  for (int c = 0; c < 3; ++c) {
    const auto& vertex = V[static_cast<std::size_t>(c)];
    const auto& centre = V[static_cast<std::size_t>((c + 1) % 3)];
    const long double dx = vertex[0] - centre[0];
    const long double dy = vertex[1] - centre[1];
    const long double rho = std::hypot(dx, dy);
    const long double phi = std::atan2(dy, dx);
    const long double h = s.arcs.half_width_deg[static_cast<std::size_t>(c)] * kPi / 180;
    for (int j = 0; j < k; ++j) {
      const long double t = k == 1 ? 0 : -h + 2 * h * j / (k - 1);
      ideal.push_back({centre[0] + rho * std::cos(phi + t), centre[1] + rho * std::sin(phi + t)});
    }
  }
  return PointSet(2, realize(ideal));
}

}  // namespace

std::string construction_name(ConstructionKind k) {
  for (const auto& [kind, name] : kKinds)
    if (kind == k) return name;
  return "unknown";
}

ConstructionKind parse_construction(const std::string& s) {
  for (const auto& [kind, name] : kKinds)
    if (s == name) return kind;
  throw InvalidSpec("unknown construction '" + s + "'");
}

std::string ConstructionSpec::describe() const {
  std::ostringstream os;
  os << "gen kind=" << construction_name(kind) << " n=" << n << " d=" << d << " scale=" << scale
     << " seed=" << seed;
  if (kind == ConstructionKind::ThreeArc) {
    os << " angles=" << arcs.vertex_deg[0] << ',' << arcs.vertex_deg[1] << ','
       << arcs.vertex_deg[2] << " halfwidths=" << arcs.half_width_deg[0] << ','
       << arcs.half_width_deg[1] << ',' << arcs.half_width_deg[2] << " radius=" << arcs.radius;
  }
  return os.str();
}

PointSet generate(const ConstructionSpec& spec) {
  require(spec.n >= 1, "n must be positive");
  require(spec.d >= 1, "d must be positive");
  require(spec.scale >= 1 && spec.scale <= kCoordLimit / 2, "scale out of range");
  switch (spec.kind) {
    case ConstructionKind::Circle:
      return make_circle(spec, false);
    case ConstructionKind::Semicircle:
      return make_circle(spec, true);
    case ConstructionKind::DecreasingChain: {
      require(spec.d == 2, "chain is planar");
      std::vector<Point> pts;
      for (int i = 0; i < spec.n; ++i) pts.push_back(Point{i, spec.n - 1 - i});
      return PointSet(2, std::move(pts));
    }
    case ConstructionKind::IncreasingLine: {
      std::vector<Point> pts;
      for (int i = 0; i < spec.n; ++i)
        pts.emplace_back(std::vector<i64>(static_cast<std::size_t>(spec.d), i + 1));
      return PointSet(spec.d, std::move(pts));
    }
    case ConstructionKind::UniformGrid: {
      int side = 1;
      long long total = 1;
      while (true) {
        total = 1;
        for (int k = 0; k < spec.d; ++k) total *= side;
        if (total >= spec.n) break;
        side *= 2;
      }
      require(total == spec.n, "uniform grid needs n = 2^(d k)");
      std::vector<Point> pts;
      for (long long idx = 0; idx < total; ++idx) {
        std::vector<i64> c(static_cast<std::size_t>(spec.d));
        long long rest = idx;
        for (int k = spec.d - 1; k >= 0; --k) {
          c[static_cast<std::size_t>(k)] = rest % side;
          rest /= side;
        }
        pts.emplace_back(std::move(c));
      }
      return PointSet(spec.d, std::move(pts));
    }
    case ConstructionKind::ThreeArc:
      return make_three_arc(spec);
    case ConstructionKind::RandomGeneral:
      return random_point_set(spec.n, spec.d, spec.seed, false);
    case ConstructionKind::RandomSymmetric:
      require(spec.n % 2 == 0, "symmetric sets need even n");
      return random_point_set(spec.n, spec.d, spec.seed, true);
  }
  throw InvalidSpec("unknown construction");
}

std::vector<int> three_arc_classes(int n) {
  std::vector<int> classes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) classes[static_cast<std::size_t>(i)] = i / std::max(1, n / 3);
  return classes;
}

i64 uniform_int(std::mt19937_64& rng, i64 lo, i64 hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<i64>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<i64>(x % span);
}

PointSet random_point_set(int n, int d, std::uint64_t seed, bool symmetric, i64 range) {
  if (n < 1 || d < 1) throw InvalidSpec("n and d must be positive");
  if (symmetric && n % 2 != 0) throw InvalidSpec("symmetric sets need even n");
  if (range <= 0) range = std::max<i64>(4LL * n * n, 1000);
  if (range > kCoordLimit) throw InvalidSpec("range exceeds coordinate cap");
  std::mt19937_64 rng(seed);
  std::vector<std::set<i64>> used(static_cast<std::size_t>(d));
  std::set<i128> norms;
  std::vector<Point> pts;
  const int wanted = symmetric ? n / 2 : n;
  long long attempts = 0;
  const long long budget = 1000LL * n + 1000;
  while (static_cast<int>(pts.size()) < (symmetric ? 2 * wanted : wanted)) {
    if (++attempts > budget) throw RetryExhausted("could not sample a point set in general position");
    std::vector<i64> c(static_cast<std::size_t>(d));
    for (auto& x : c) x = symmetric ? uniform_int(rng, -range, range) : uniform_int(rng, 0, range);
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) {
      const i64 x = c[static_cast<std::size_t>(k)];
      if (used[static_cast<std::size_t>(k)].count(x)) ok = false;
      if (symmetric && (x == 0 || used[static_cast<std::size_t>(k)].count(-x))) ok = false;
    }
    i128 norm = 0;
    for (i64 x : c) norm += static_cast<i128>(x) * x;
    if (symmetric && norms.count(norm)) ok = false;
    if (!ok) continue;
    for (int k = 0; k < d; ++k) {
      used[static_cast<std::size_t>(k)].insert(c[static_cast<std::size_t>(k)]);
      if (symmetric) used[static_cast<std::size_t>(k)].insert(-c[static_cast<std::size_t>(k)]);
    }
    if (symmetric) {
      norms.insert(norm);
      std::vector<i64> neg = c;
      for (auto& x : neg) x = -x;
      pts.emplace_back(std::move(c));
      pts.emplace_back(std::move(neg));
    } else {
      pts.emplace_back(std::move(c));
    }
  }
  return PointSet(d, std::move(pts));
}

ObtuseReport verify_obtuse_pattern(const PointSet& P, const std::vector<int>& classes,
                                   std::size_t max_reported) {
  if (P.dim() != 2) throw DimensionMismatch("obtuse pattern check is planar");
  if (static_cast<int>(classes.size()) != P.size())
    throw InvalidSpec("class labels must cover every point");
  static const std::set<std::array<int, 3>> kAllowed{
      {0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 1}, {1, 2, 2}, {0, 0, 2}};
  ObtuseReport report;
  auto flag = [&](int i, int j, int k, std::string why) {
    report.holds = false;
    if (report.violations.size() < max_reported) report.violations.push_back({{i, j, k}, std::move(why)});
  };
  const int n = P.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const std::array<int, 3> t{i, j, k};
        const i128 cross = static_cast<i128>(P[j][0] - P[i][0]) * (P[k][1] - P[i][1]) -
                           static_cast<i128>(P[j][1] - P[i][1]) * (P[k][0] - P[i][0]);
        if (cross == 0) {
          flag(i, j, k, "degenerate (collinear) triangle");
          continue;
        }
        bool obtuse = false, right = false;
        for (int v = 0; v < 3; ++v) {
          const Point& o = P[t[static_cast<std::size_t>(v)]];
          const Point& a = P[t[static_cast<std::size_t>((v + 1) % 3)]];
          const Point& b = P[t[static_cast<std::size_t>((v + 2) % 3)]];
          const i128 dot = static_cast<i128>(a[0] - o[0]) * (b[0] - o[0]) +
                           static_cast<i128>(a[1] - o[1]) * (b[1] - o[1]);
          if (dot < 0) obtuse = true;
          if (dot == 0) right = true;
        }
        if (right) {
          flag(i, j, k, "right triangle");
          continue;
        }
        std::array<int, 3> pattern{classes[static_cast<std::size_t>(i)],
                                   classes[static_cast<std::size_t>(j)],
                                   classes[static_cast<std::size_t>(k)]};
        std::sort(pattern.begin(), pattern.end());
        const bool allowed = kAllowed.count(pattern) > 0;
        if (obtuse) ++report.obtuse_triples;
        if (obtuse && !allowed) flag(i, j, k, "obtuse triangle outside the allowed patterns");
        if (!obtuse && allowed) flag(i, j, k, "allowed pattern is not obtuse");
      }
  return report;
}

}  // namespace sel
