#include "selection/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "selection/constructions.hpp"
#include "selection/delaunay.hpp"
#include "selection/depth.hpp"
#include "selection/first_selection.hpp"
#include "selection/second_selection.hpp"

namespace sel {

namespace {

constexpr std::size_t kKeptFailures = 5;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

i64 choose2(i64 n) { return n * (n - 1) / 2; }

void record_failure(CriterionResult& r, Json instance) {
  ++r.failures;
  r.passed = false;
  auto& list = r.data["failures"];
  if (list.is_null()) list = Json::array();
  if (list.size() < kKeptFailures) list.push_back(std::move(instance));
}

void finish(CriterionResult& r, const std::string& summary) {
  std::ostringstream s;
  s << r.cases << " cases, " << r.failures << " failures";
  if (!summary.empty()) s << "; " << summary;
  r.detail = s.str();
}

Rational quadratic(Rational c, i64 n, Rational lin) { return c * Rational(n * n) + lin * Rational(n); }

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int criterion, i64 trial) {
  return splitmix(splitmix(seed + static_cast<std::uint64_t>(criterion)) + static_cast<std::uint64_t>(trial));
}

i64 decreasing_chain_quadrant_max(int n) {
  // Pairs (i, j) strictly around the k-th chain point: k * (n - 1 - k).
  const i64 a = (n - 1) / 2;
  return a * (n - 1 - a);
}

i64 rectangle_second_m_floor(int n) {
  const long double t = 3.0L * std::pow(static_cast<long double>(n), 4.0L / 3.0L);
  i64 m = static_cast<i64>(std::ceil(t - 1e-9L));
  // Exact fix-up: m^3 >= 27 n^4 and (m-1)^3 < 27 n^4.
  const i128 target = 27 * static_cast<i128>(n) * n * n * n;
  while (static_cast<i128>(m) * m * m < target) ++m;
  while (m > 0 && static_cast<i128>(m - 1) * (m - 1) * (m - 1) >= target) --m;
  return std::min(m, choose2(n));
}

// ---------------------------------------------------------------- 1

CriterionResult check_oracle_equivalence(std::uint64_t seed) {
  CriterionResult r;
  r.id = 1;
  r.name = "oracle equivalence";
  const Family families[] = {Family::Rectangle, Family::Quadrant, Family::SlabBoth, Family::Skyline, Family::Disk};
  i64 comparisons = 0;
  for (int t = 0; t < 500; ++t) {
    const auto s = trial_seed(seed, 1, t);
    std::mt19937_64 rng(s);
    const int n = static_cast<int>(uniform_int(rng, 5, 48));
    const auto P = random_point_set(n, 2, s);
    const i64 range = std::max<i64>(4LL * n * n, 1000);
    std::vector<RationalPoint> cands;
    for (int c = 0; c < 10; ++c) cands.push_back(P[static_cast<int>(uniform_int(rng, 0, n - 1))]);
    for (int c = 0; c < 10; ++c)
      cands.push_back(RationalPoint({2 * uniform_int(rng, -1, range) + 1, 2 * uniform_int(rng, -1, range) + 1}, 2));
    ++r.cases;
    bool ok = true;
    Json bad;
    for (Family f : families)
      for (const auto& q : cands) {
        ++comparisons;
        const i64 fast = depth_fast(P, f, q).depth;
        const i64 brute = depth_brute(P, f, q).depth;
        if (fast != brute && ok) {
          ok = false;
          bad = {{"trial", t}, {"seed", s}, {"family", std::string(family_name(f))},
                 {"query", point_json(q)}, {"fast", fast}, {"brute", brute}, {"set", point_set_json(P)}};
        }
      }
    if (!ok) record_failure(r, bad);
  }
  r.data["comparisons"] = comparisons;
  finish(r, std::to_string(comparisons) + " depth comparisons");
  return r;
}

// ---------------------------------------------------------------- 2

namespace {

struct LowerCase {
  std::string label;
  BoundSpec spec;
  int d = 2;
};

void run_lower(CriterionResult& r, const LowerCase& lc, std::uint64_t seed, int salt, Json& summary) {
  bool first = true;
  Rational worst{0};
  for (int t = 0; t < 200; ++t) {
    const auto s = trial_seed(seed, 200 + salt, t);
    std::mt19937_64 rng(s);
    const int n = static_cast<int>(uniform_int(rng, 8, 48));
    const auto P = random_point_set(n, lc.d, s);
    const auto c = verify_first_selection(P, lc.spec, s);
    ++r.cases;
    const Rational margin = Rational(c.observed) - c.required;
    if (first || margin < worst) worst = margin;
    first = false;
    if (!c.holds) {
      Json j = bound_check_json(c);
      j["case"] = lc.label;
      j["trial"] = t;
      j["set"] = point_set_json(P);
      record_failure(r, j);
    }
  }
  Json e{{"case", lc.label}};
  put_rational(e, "min_margin", worst);
  summary.push_back(e);
}

LowerCase lower(std::string label, Family f, Variant v, Rational c, i64 slack, Finder finder, int d = 2) {
  LowerCase lc;
  lc.label = std::move(label);
  lc.spec.family = f;
  lc.spec.variant = v;
  lc.spec.coefficient = c;
  lc.spec.slack = slack;
  lc.spec.direction = BoundDirection::Lower;
  lc.spec.finder = finder;
  lc.spec.caps = TukeyCaps{60, 48, 16};
  lc.d = d;
  return lc;
}

}  // namespace

CriterionResult check_first_lower_bounds(std::uint64_t seed) {
  CriterionResult r;
  r.id = 2;
  r.name = "first selection lower bounds";
  Json summary = Json::array();
  const auto S = Variant::Strong;
  const auto W = Variant::Weak;
  const auto C = Finder::Constructive;
  const std::vector<LowerCase> cases = {
      lower("rect strong", Family::Rectangle, S, Rational(1, 16), 2, C),
      lower("rect weak", Family::Rectangle, W, Rational(1, 8), 2, C),
      lower("quadrant strong", Family::Quadrant, S, Rational(1, 4), 2, C),
      lower("slab strong", Family::SlabBoth, S, Rational(3, 8), 3, C),
      lower("skyline strong", Family::Skyline, S, Rational(1, 9), 2, C),
      lower("skyline weak", Family::Skyline, W, Rational(1, 4), 1, C),
      lower("disk strong", Family::Disk, S, Rational(1, 16), 2, C),
      lower("hypersphere weak d=2", Family::Hypersphere, W, Rational(1, 6), 1, C, 2),
      lower("hypersphere weak d=3", Family::Hypersphere, W, Rational(1, 8), 1, C, 3),
      lower("box weak d=3", Family::Box, W, Rational(1, 128), 2, C, 3),
  };
  for (std::size_t i = 0; i < cases.size(); ++i) run_lower(r, cases[i], seed, static_cast<int>(i), summary);

  // Weak quadrants: a point beyond every input point lies in all C(n,2).
  for (int t = 0; t < 200; ++t) {
    const auto s = trial_seed(seed, 250, t);
    std::mt19937_64 rng(s);
    const int n = static_cast<int>(uniform_int(rng, 8, 48));
    const auto P = random_point_set(n, 2, s);
    const auto w = weak_max(P, Family::Quadrant);
    ++r.cases;
    if (w.depth != choose2(n))
      record_failure(r, {{"case", "quadrant weak"}, {"trial", t}, {"seed", s}, {"observed", w.depth},
                         {"required", choose2(n)}, {"set", point_set_json(P)}});
  }
  summary.push_back({{"case", "quadrant weak"}, {"exact", "C(n,2)"}});

  // Origin-symmetric sets.
  for (int t = 0; t < 200; ++t) {
    const auto s = trial_seed(seed, 260, t);
    std::mt19937_64 rng(s);
    const int n = 2 * static_cast<int>(uniform_int(rng, 4, 24));
    const auto P = random_point_set(n, 2, s, true);
    const int idx = symmetric_peel(P);
    const i64 strong = depth_fast(P, Family::Disk, P[idx]).depth;
    // (n/2 - 1)^2 / 2
    const Rational need_strong(static_cast<i64>(n / 2 - 1) * (n / 2 - 1), 2);
    const i64 origin = disk_depth_sweep(P, RationalPoint({0, 0}, 1));
    const Rational need_origin = quadratic(Rational(1, 4), n, Rational(-1));
    r.cases += 2;
    if (Rational(strong) < need_strong) {
      Json j{{"case", "symmetric disk strong"}, {"trial", t}, {"seed", s}, {"observed", strong},
             {"set", point_set_json(P)}};
      put_rational(j, "required", need_strong);
      record_failure(r, j);
    }
    if (Rational(origin) < need_origin) {
      Json j{{"case", "symmetric weak origin"}, {"trial", t}, {"seed", s}, {"observed", origin},
             {"set", point_set_json(P)}};
      put_rational(j, "required", need_origin);
      record_failure(r, j);
    }
  }
  summary.push_back({{"case", "symmetric disk strong"}, {"bound", "(n/2-1)^2/2"}});
  summary.push_back({{"case", "symmetric weak origin"}, {"bound", "n^2/4-n"}});
  r.data["cases"] = summary;
  finish(r, std::to_string(cases.size() + 3) + " bound families");
  return r;
}

// ---------------------------------------------------------------- 3

namespace {

struct Witness {
  CriterionResult& r;
  Json& list;
  void add(const std::string& label, int n, i64 observed, const Rational& bound, bool holds,
           const PointSet& P) {
    ++r.cases;
    Json e{{"case", label}, {"n", n}, {"observed", observed}, {"holds", holds}};
    put_rational(e, "bound", bound);
    list.push_back(e);
    if (!holds) {
      Json j = e;
      j["set"] = point_set_json(P);
      record_failure(r, j);
    }
  }
  void upper(const std::string& label, int n, i64 observed, Rational c, const PointSet& P) {
    const Rational b = quadratic(c, n, Rational(1));
    add(label, n, observed, b, Rational(observed) <= b, P);
  }
};

PointSet build(ConstructionKind k, int n, int d = 2) {
  ConstructionSpec s;
  s.kind = k;
  s.n = n;
  s.d = d;
  return generate(s);
}

}  // namespace

CriterionResult check_upper_witnesses(std::uint64_t) {
  CriterionResult r;
  r.id = 3;
  r.name = "upper-bound witnesses";
  Json list = Json::array();
  Witness w{r, list};
  for (int n : {24, 48}) {
    const auto circle = build(ConstructionKind::Circle, n);
    const i64 srect = strong_max(circle, Family::Rectangle).depth;
    w.upper("circle strong rect", n, srect, Rational(1, 16), circle);
    const i64 target = static_cast<i64>(n) * n / 16;
    w.add("circle strong rect near n^2/16", n, srect, Rational(target),
          std::abs(srect - target) <= n, circle);
    w.upper("circle weak rect", n, weak_max(circle, Family::Rectangle).depth, Rational(1, 8), circle);
    w.upper("circle strong slab", n, strong_max(circle, Family::SlabBoth).depth, Rational(3, 8), circle);
    w.upper("circle strong disk", n, strong_max(circle, Family::Disk).depth, Rational(1, 8), circle);

    const auto semi = build(ConstructionKind::Semicircle, n);
    w.upper("semicircle strong skyline", n, strong_max(semi, Family::Skyline).depth, Rational(1, 8), semi);

    const auto chain = build(ConstructionKind::DecreasingChain, n);
    const i64 q = strong_max(chain, Family::Quadrant).depth;
    const i64 exact = decreasing_chain_quadrant_max(n);
    w.add("chain strong quadrant exact", n, q, Rational(exact), q == exact, chain);

    for (int d : {2, 3}) {
      const auto line = build(ConstructionKind::IncreasingLine, n, d);
      w.upper("line weak hypersphere d=" + std::to_string(d), n, weak_max(line, Family::Hypersphere).depth,
              Rational(1, 4), line);
    }

    const auto arcs = build(ConstructionKind::ThreeArc, n);
    const auto pattern = verify_obtuse_pattern(arcs, three_arc_classes(n));
    w.add("three-arc obtuse pattern", n, pattern.obtuse_triples, Rational(pattern.obtuse_triples),
          pattern.holds, arcs);
    w.upper("three-arc strong disk", n, strong_max(arcs, Family::Disk).depth, Rational(1, 9), arcs);
  }
  for (int d : {2, 3}) {
    const int n = 64;
    const auto grid = build(ConstructionKind::UniformGrid, n, d);
    w.upper("grid weak box d=" + std::to_string(d), n, weak_max(grid, Family::Box).depth,
            Rational(1, i64{1} << (d + 1)), grid);
  }
  r.data["witnesses"] = list;
  finish(r, "");
  return r;
}

// ---------------------------------------------------------------- 4

CriterionResult check_interval_second(std::uint64_t seed) {
  CriterionResult r;
  r.id = 4;
  r.name = "interval second selection";
  i64 flagged = 0;
  Json flags = Json::array();
  for (int t = 0; t < 300; ++t) {
    const auto s = trial_seed(seed, 4, t);
    std::mt19937_64 rng(s);
    const int n = static_cast<int>(uniform_int(rng, 2, 64));
    const i64 total = choose2(n);
    i64 lo = 1, hi = total;
    switch (t % 3) {
      case 0:
        hi = std::min<i64>(n - 1, total);
        break;
      case 1:
        lo = std::min<i64>(n, total);
        hi = std::max(lo, std::min<i64>(static_cast<i64>(n) * n / 4, total));
        break;
      default:
        lo = std::min<i64>(static_cast<i64>(n) * n / 4, total);
        lo = std::max<i64>(lo, 1);
        break;
    }
    const i64 m = uniform_int(rng, lo, hi);
    const auto P = random_point_set(n, 1, s);
    const auto C = sample_subset(P, Family::Interval, m, s);
    const auto prof = interval_depth_profile(P, C);
    ++r.cases;
    if (!prof.meets_lower_bound) {
      Json j{{"trial", t}, {"seed", s}, {"n", n}, {"m", m}, {"max", prof.max}};
      if (m < n) {
        // Below the lemma's m = Omega(n) hypothesis: reported, not failed.
        ++flagged;
        if (flags.size() < kKeptFailures) flags.push_back(j);
      } else {
        j["set"] = point_set_json(P);
        std::ostringstream sub;
        write_subset(sub, C);
        j["subset"] = sub.str();
        record_failure(r, j);
      }
    }
  }
  r.data["flagged_sparse"] = flagged;
  r.data["flagged_examples"] = flags;

  Json upper = Json::array();
  for (int n : {16, 32, 64})
    for (int k : {2, 4}) {
      const i64 m = static_cast<i64>(n) * k;
      const auto con = gen_interval_upper(n, m);
      const auto prof = interval_depth_profile(con.points, con.subset);
      // m^2/n^2 + 3m/n = k^2 + 3k for m = n k.
      const Rational target = Rational(m * m, static_cast<i64>(n) * n) + Rational(3 * m, n);
      const Rational obs(prof.max);
      const bool ok = obs <= 4 * target && 4 * obs >= target;
      ++r.cases;
      Json e{{"n", n}, {"m", m}, {"max", prof.max}, {"holds", ok}};
      put_rational(e, "target", target);
      upper.push_back(e);
      if (!ok) record_failure(r, e);
    }
  r.data["upper_construction"] = upper;
  finish(r, std::to_string(flagged) + " sparse instances flagged");
  return r;
}

// ---------------------------------------------------------------- 5

CriterionResult check_rectangle_second(std::uint64_t seed) {
  CriterionResult r;
  r.id = 5;
  r.name = "rectangle second selection";
  const int sizes[] = {12, 16, 24};
  i64 partitions = 0;
  for (int t = 0; t < 100; ++t) {
    const auto s = trial_seed(seed, 5, t);
    std::mt19937_64 rng(s);
    const int n = sizes[t % 3];
    const i64 m = uniform_int(rng, rectangle_second_m_floor(n), choose2(n));
    const auto P = random_point_set(n, 2, s);
    const auto S = sample_subset(P, Family::Rectangle, m, s);
    const auto g = grid_depth_map(P, S);
    const auto J = rectangle_grid_counts(P, S);
    i64 sumJ = 0;
    for (i64 v : J) sumJ += v;
    const auto cubic = check_cubic_lemma(P, S);
    partitions += static_cast<i64>(cubic.entries.size());
    ++r.cases;
    if (!g.meets_cubic_bound || g.total != sumJ || !cubic.holds) {
      std::ostringstream sub;
      write_subset(sub, S);
      record_failure(r, {{"trial", t}, {"seed", s}, {"n", n}, {"m", m}, {"max", g.max},
                         {"cubic_bound", g.meets_cubic_bound}, {"sum_grid", g.total}, {"sum_j", sumJ},
                         {"cubic_lemma", cubic.holds}, {"set", point_set_json(P)}, {"subset", sub.str()}});
    }
  }
  r.data["partitions_checked"] = partitions;
  finish(r, std::to_string(partitions) + " partitions checked");
  return r;
}

// ---------------------------------------------------------------- 6

namespace {

// Ranks and a 2D prefix table over rank space.
struct RankGrid {
  int n = 0;
  std::vector<int> rx, ry;
  std::vector<int> pre;  // (n+1)^2, pre[(i)*(n+1)+j] = #points with rx < i and ry < j

  explicit RankGrid(const PointSet& P) : n(P.size()), rx(n), ry(n), pre((n + 1) * (n + 1), 0) {
    for (int axis = 0; axis < 2; ++axis) {
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return P[a][axis] < P[b][axis]; });
      for (int k = 0; k < n; ++k) (axis == 0 ? rx : ry)[idx[k]] = k;
    }
    for (int i = 0; i < n; ++i) ++pre[(rx[i] + 1) * (n + 1) + ry[i] + 1];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        pre[i * (n + 1) + j] += pre[(i - 1) * (n + 1) + j] + pre[i * (n + 1) + j - 1] -
                                pre[(i - 1) * (n + 1) + j - 1];
  }
  // Points with x-rank in [x0, x1] and y-rank in [y0, y1].
  int count(int x0, int x1, int y0, int y1) const {
    auto at = [&](int i, int j) { return pre[i * (n + 1) + j]; };
    return at(x1 + 1, y1 + 1) - at(x0, y1 + 1) - at(x1 + 1, y0) + at(x0, y0);
  }
};

}  // namespace

CriterionResult check_centerpoint_soundness(std::uint64_t seed) {
  CriterionResult r;
  r.id = 6;
  r.name = "strong centerpoint soundness";
  i64 objects = 0;
  for (int t = 0; t < 100; ++t) {
    const auto s = trial_seed(seed, 6, t);
    std::mt19937_64 rng(s);
    const int n = static_cast<int>(uniform_int(rng, 4, 20));
    const auto P = random_point_set(n, 2, s);
    const RankGrid G(P);
    ++r.cases;
    std::string what;
    try {
      const int rc = strong_rect_centerpoint(P);
      const int qc = quadrant_strong_point(P);
      const int sc = skyline_strong_point(P);
      // Rectangles over rank ranges: > 3n/4 points means 4 * count > 3n.
      for (int x0 = 0; x0 < n && what.empty(); ++x0)
        for (int x1 = x0; x1 < n && what.empty(); ++x1) {
          for (int y0 = 0; y0 < n && what.empty(); ++y0)
            for (int y1 = y0; y1 < n; ++y1) {
              ++objects;
              if (4 * G.count(x0, x1, y0, y1) <= 3 * n) continue;
              const bool in = G.rx[rc] >= x0 && G.rx[rc] <= x1 && G.ry[rc] >= y0 && G.ry[rc] <= y1;
              if (!in) {
                what = "rectangle";
                break;
              }
            }
          // Skylines: column [x0, x1], everything up to y-rank y1.
          for (int y1 = 0; y1 < n && what.empty(); ++y1) {
            ++objects;
            if (3 * G.count(x0, x1, 0, y1) <= 2 * n) continue;
            if (!(G.rx[sc] >= x0 && G.rx[sc] <= x1 && G.ry[sc] <= y1)) what = "skyline";
          }
        }
      // Quadrants opening to +x, +y.
      for (int x0 = 0; x0 < n && what.empty(); ++x0)
        for (int y0 = 0; y0 < n; ++y0) {
          ++objects;
          if (2 * G.count(x0, n - 1, y0, n - 1) <= n) continue;
          if (!(G.rx[qc] >= x0 && G.ry[qc] >= y0)) {
            what = "quadrant";
            break;
          }
        }
    } catch (const NotFound& e) {
      what = std::string("not found: ") + e.what();
    }
    if (!what.empty())
      record_failure(r, {{"trial", t}, {"seed", s}, {"object", what}, {"set", point_set_json(P)}});
  }
  r.data["objects_enumerated"] = objects;
  finish(r, std::to_string(objects) + " objects enumerated");
  return r;
}

// ---------------------------------------------------------------- 7

namespace {

bool distinct_diagonals(const PointSet& P) {
  std::set<i64> seen;
  for (const auto& p : P)
    if (!seen.insert(p[0] + p[1]).second) return false;
  return true;
}

}  // namespace

CriterionResult check_delaunay_planarity(std::uint64_t seed) {
  CriterionResult r;
  r.id = 7;
  r.name = "delaunay planarity";
  const Family families[] = {Family::Skyline, Family::DownTriangle, Family::Disk};
  i64 edges = 0;
  for (int t = 0; t < 200; ++t) {
    auto s = trial_seed(seed, 7, t);
    std::mt19937_64 rng(s);
    const int n = static_cast<int>(uniform_int(rng, 3, 60));
    PointSet P = random_point_set(n, 2, s);
    // Down-triangles also need distinct u + v.
    for (int attempt = 1; !distinct_diagonals(P); ++attempt) {
      if (attempt > 100) throw RetryExhausted("no point set with distinct diagonals");
      s = splitmix(s);
      P = random_point_set(n, 2, s);
    }
    for (Family f : families) {
      const auto E = delaunay_graph(P, f);
      const auto pr = planarity_check(E, n);
      edges += static_cast<i64>(E.size());
      ++r.cases;
      if (!pr.ok())
        record_failure(r, {{"trial", t}, {"seed", s}, {"family", std::string(family_name(f))},
                           {"edges", E.size()}, {"edge_bound", pr.edge_bound}, {"planar", pr.planar},
                           {"set", point_set_json(P)}});
    }
  }
  r.data["edges"] = edges;
  finish(r, std::to_string(edges) + " edges in total");
  return r;
}

// ---------------------------------------------------------------- report

bool SelftestReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

Json SelftestReport::to_json() const {
  Json j = report_envelope("selftest");
  j["seed"] = seed;
  j["passed"] = passed();
  Json list = Json::array();
  for (const auto& c : criteria)
    list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                    {"failures", c.failures}, {"detail", c.detail}, {"data", c.data}});
  j["criteria"] = list;
  return j;
}

SelftestReport run_selftest(std::uint64_t seed, const std::vector<int>& only) {
  using Check = CriterionResult (*)(std::uint64_t);
  const Check checks[] = {check_oracle_equivalence, check_first_lower_bounds, check_upper_witnesses,
                          check_interval_second,    check_rectangle_second,   check_centerpoint_soundness,
                          check_delaunay_planarity};
  SelftestReport rep;
  rep.seed = seed;
  for (int id = 1; id <= 7; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    rep.criteria.push_back(checks[id - 1](seed));
  }
  return rep;
}

}  // namespace sel
