#include "selection/tukey.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <random>

#include "selection/constructions.hpp"
#include "selection/predicates.hpp"

namespace sel {

namespace {

using Big = boost::multiprecision::cpp_int;
using Vec = std::vector<Big>;

Big to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  Big out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? Big(-out) : out;
}

Big dot(const Vec& a, const Vec& b) {
  Big s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Big det(const std::vector<Vec>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Big total = 0;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < k; ++r) {
      Vec row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Big term = m[0][col] * det(minor);
    if (col % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Vector w with w . x = det(rows, x) for d-1 rows in R^d.
Vec cross(const std::vector<Vec>& rows, int d) {
  Vec w(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    std::vector<Vec> minor;
    for (const auto& r : rows) {
      Vec row;
      for (int c = 0; c < d; ++c)
        if (c != j) row.push_back(r[static_cast<std::size_t>(c)]);
      minor.push_back(std::move(row));
    }
    Big m = det(minor);
    w[static_cast<std::size_t>(j)] = ((d - 1 + j) % 2 == 0) ? m : Big(-m);
  }
  return w;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Big& x) { return x == 0; });
}

int rank_of(std::vector<Vec> m) {
  // Fraction-free elimination.
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const Vec& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Big f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * p[c] - f * p[j];
    }
    ++rank;
  }
  return rank;
}

// Minimum, over directions u orthogonal to every vector of C and in general
// position with respect to V, of the number of v in V with v . u > 0.
i64 min_open(const std::vector<Vec>& C, const std::vector<Vec>& V, int d) {
  if (V.empty()) return 0;
  const int k = d - static_cast<int>(C.size());
  if (k == 1) {
    const Vec w = cross(C, d);
    i64 pos = 0, neg = 0;
    for (const auto& v : V) (dot(v, w) > 0 ? pos : neg)++;
    return std::min(pos, neg);
  }
  const int pick = k - 1;
  const int n = static_cast<int>(V.size());
  i64 best = static_cast<i64>(n);
  bool found = false;
  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (pick <= n) {
    std::vector<Vec> rows = C;
    for (int i : idx) rows.push_back(V[static_cast<std::size_t>(i)]);
    Vec w = cross(rows, d);
    if (!is_zero(w)) {
      found = true;
      i64 pos = 0, neg = 0;
      std::vector<Vec> zero;
      for (const auto& v : V) {
        Big s = dot(v, w);
        if (s > 0)
          ++pos;
        else if (s < 0)
          ++neg;
        else
          zero.push_back(v);
      }
      const i64 base = std::min(pos, neg);
      if (base < best) {
        std::vector<Vec> C2 = C;
        C2.push_back(w);
        best = std::min(best, base + min_open(C2, zero, d));
      }
    }
    // next combination
    int i = pick - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - pick + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < pick; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (found) return best;
  // The projections of V span too little: restrict to a hyperplane of the
  // current subspace that contains all of them.
  std::vector<Vec> rows = C;
  for (const auto& v : V) {
    auto trial = rows;
    trial.push_back(v);
    if (rank_of(trial) > rank_of(rows)) rows = std::move(trial);
  }
  for (int m = 0; m < d && static_cast<int>(rows.size()) < d - 1; ++m) {
    Vec e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(m)] = 1;
    auto trial = rows;
    trial.push_back(e);
    if (rank_of(trial) > static_cast<int>(rows.size())) rows = std::move(trial);
  }
  std::vector<Vec> C2 = C;
  C2.push_back(cross(rows, d));
  return min_open(C2, V, d);
}

i64 tukey_depth_2d(const PointSet& P, const RationalPoint& c) {
  std::vector<std::array<i128, 2>> vs;
  i64 zeros = 0;
  for (const auto& a : P) {
    auto v = scaled_offset(a, c);
    if (v[0] == 0 && v[1] == 0)
      ++zeros;
    else
      vs.push_back({v[0], v[1]});
  }
  if (vs.empty()) return zeros;
  i64 best = static_cast<i64>(vs.size());
  for (const auto& vi : vs) {
    // Directions just either side of the normal of the line through c and vi.
    for (int s : {1, -1}) {
      for (int t : {1, -1}) {
        i64 cnt = 0;
        for (const auto& v : vs) {
          int a = s * sign_cross(vi[0], vi[1], v[0], v[1]);  // sign of v . w
          if (a == 0) {
            const std::array<i128, 2> vv{v[0], v[1]};
            a = t * sign_dot(vv, vi);
          }
          if (a > 0) ++cnt;
        }
        best = std::min(best, cnt);
      }
    }
  }
  return zeros + best;
}

i64 tukey_depth_general(const PointSet& P, const RationalPoint& c) {
  const int d = P.dim();
  std::vector<Vec> vs;
  i64 zeros = 0;
  for (const auto& a : P) {
    auto v = scaled_offset(a, c);
    if (std::all_of(v.begin(), v.end(), [](i128 x) { return x == 0; })) {
      ++zeros;
      continue;
    }
    Vec b;
    for (i128 x : v) b.push_back(to_big(x));
    vs.push_back(std::move(b));
  }
  return zeros + min_open({}, vs, d);
}

RationalPoint round_rational(const std::vector<double>& x) {
  double mag = 1;
  for (double v : x) mag = std::max(mag, std::abs(v));
  i64 den = i64{1} << 12;
  while (den > 1 && mag * static_cast<double>(den) > 1e17) den >>= 1;
  std::vector<i128> num;
  for (double v : x) num.push_back(static_cast<i128>(std::llround(v * static_cast<double>(den))));
  return make_rational_point(num, den);
}

std::vector<double> radon_point(const std::vector<std::vector<double>>& pts) {
  const int m = static_cast<int>(pts.size());
  const int d = static_cast<int>(pts[0].size());
  Eigen::MatrixXd A(d + 1, m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < d; ++k) A(k, j) = pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    A(d, j) = 1.0;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  Eigen::MatrixXd ker = lu.kernel();
  std::vector<double> out(static_cast<std::size_t>(d), 0.0);
  double total = 0;
  for (int j = 0; j < m; ++j) {
    const double l = ker(j, 0);
    if (l > 0) {
      total += l;
      for (int k = 0; k < d; ++k)
        out[static_cast<std::size_t>(k)] += l * pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
  }
  if (total <= 0) return pts[0];
  for (auto& v : out) v /= total;
  return out;
}

std::vector<double> iterated_radon(const PointSet& P, std::mt19937_64& rng, int levels) {
  const int d = P.dim();
  const int group = d + 2;
  int count = 1;
  for (int l = 0; l < levels; ++l) count *= group;
  std::vector<std::vector<double>> layer;
  for (int i = 0; i < count; ++i) {
    const auto& p = P[static_cast<int>(uniform_int(rng, 0, P.size() - 1))];
    std::vector<double> x;
    for (i64 c : p.coords) x.push_back(static_cast<double>(c));
    layer.push_back(std::move(x));
  }
  while (layer.size() > 1) {
    std::vector<std::vector<double>> next;
    for (std::size_t i = 0; i + static_cast<std::size_t>(group) <= layer.size();
         i += static_cast<std::size_t>(group))
      next.push_back(radon_point({layer.begin() + static_cast<std::ptrdiff_t>(i),
                                  layer.begin() + static_cast<std::ptrdiff_t>(i) + group}));
    layer = std::move(next);
  }
  return layer[0];
}

// min cost.z subject to M z = rhs (rhs >= 0), z >= 0, from an artificial
// basis. Returns false if infeasible or unbounded. On success y holds the
// simplex multipliers of the optimal basis.
bool simplex_multipliers(const std::vector<std::vector<long double>>& M, const std::vector<long double>& rhs,
                         const std::vector<long double>& cost, std::vector<long double>& y) {
  const std::size_t rows = M.size();
  const std::size_t m = cost.size();
  const std::size_t cols = m + rows;
  constexpr long double eps = 1e-12L;
  std::vector<std::vector<long double>> T(rows, std::vector<long double>(cols + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) T[r][j] = M[r][j];
    T[r][m + r] = 1;
    T[r][cols] = rhs[r];
    basis[r] = m + r;
  }
  auto run = [&](const std::vector<long double>& c, bool allow_artificial) {
    for (int iter = 0; iter < 200000; ++iter) {
      std::size_t enter = cols;
      long double best = -eps;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!allow_artificial && j >= m) continue;
        long double rc = c[j];
        for (std::size_t r = 0; r < rows; ++r) rc -= c[basis[r]] * T[r][j];
        if (rc < best) {
          best = rc;
          enter = j;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = rows;
      long double ratio = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (T[r][enter] <= eps) continue;
        const long double q = T[r][cols] / T[r][enter];
        if (leave == rows || q < ratio - eps || (q <= ratio + eps && basis[r] < basis[leave])) {
          leave = r;
          ratio = q;
        }
      }
      if (leave == rows) return false;
      const long double piv = T[leave][enter];
      for (auto& v : T[leave]) v /= piv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == leave || T[r][enter] == 0) continue;
        const long double f = T[r][enter];
        for (std::size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
      }
      basis[leave] = enter;
    }
    return false;
  };
  std::vector<long double> phase1(cols, 0);
  for (std::size_t j = m; j < cols; ++j) phase1[j] = 1;
  if (!run(phase1, true)) return false;
  long double infeas = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= m) infeas += T[r][cols];
  if (infeas > 1e-9L) return false;
  std::vector<long double> phase2(cols, 0);
  for (std::size_t j = 0; j < m; ++j) phase2[j] = cost[j];
  if (!run(phase2, false)) return false;
  // The artificial columns hold the inverse basis.
  y.assign(rows, 0);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t r = 0; r < rows; ++r) y[j] += phase2[basis[r]] * T[r][m + j];
  return true;
}

// Centre and radius of the largest ball inside the depth-k region, which is
// cut out by the closed sides of hyperplanes through d points of P leaving
// fewer than k points strictly outside. Solved as the dual LP, whose
// equality system has only d + 1 rows.
bool depth_region_center(const PointSet& P, i64 k, std::vector<long double>& center, long double& radius) {
  const int d = P.dim();
  const int n = P.size();
  std::vector<long double> origin(static_cast<std::size_t>(d), 0);
  for (const auto& p : P)
    for (int j = 0; j < d; ++j) origin[static_cast<std::size_t>(j)] += static_cast<long double>(p[j]) / n;
  std::vector<std::vector<long double>> A;  // unit normals, then 1 for the radius
  std::vector<long double> b;
  auto add = [&](std::vector<long double> a, long double rhs) {
    long double norm = 0;
    for (auto v : a) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) return;
    for (auto& v : a) v /= norm;
    a.push_back(1);
    A.push_back(std::move(a));
    b.push_back(rhs / norm);
  };
  std::vector<Vec> pts;
  for (const auto& p : P) {
    Vec v;
    for (int j = 0; j < d; ++j) v.push_back(Big(p[j]));
    pts.push_back(std::move(v));
  }
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (d <= n) {
    std::vector<Vec> rows;
    const Vec& base = pts[static_cast<std::size_t>(idx[0])];
    for (int i = 1; i < d; ++i) {
      Vec r = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] -= base[static_cast<std::size_t>(j)];
      rows.push_back(std::move(r));
    }
    const Vec w = cross(rows, d);
    if (!is_zero(w)) {
      const Big off = dot(w, base);
      i64 above = 0, below = 0;
      for (const auto& q : pts) {
        const Big s = dot(w, q) - off;
        if (s > 0) ++above;
        if (s < 0) ++below;
      }
      std::vector<long double> wl;
      long double rhs = static_cast<long double>(off);
      for (int j = 0; j < d; ++j) {
        wl.push_back(static_cast<long double>(w[static_cast<std::size_t>(j)]));
        rhs -= wl.back() * origin[static_cast<std::size_t>(j)];
      }
      if (above < k) add(wl, rhs);
      if (below < k) {
        for (auto& v : wl) v = -v;
        add(wl, -rhs);
      }
    }
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - d + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < d; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  if (A.empty()) return false;
  // Dual: min b.lambda, A^T lambda = e_radius, lambda >= 0.
  const std::size_t rows = static_cast<std::size_t>(d) + 1;
  std::vector<std::vector<long double>> M(rows, std::vector<long double>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t r = 0; r < rows; ++r) M[r][i] = A[i][r];
  std::vector<long double> rhs(rows, 0);
  rhs[rows - 1] = 1;
  std::vector<long double> y;
  if (!simplex_multipliers(M, rhs, b, y)) return false;
  center.assign(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) center[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)] + origin[static_cast<std::size_t>(j)];
  radius = y[rows - 1];
  return true;
}

// Exact Radon point of d + 2 points in R^d; throws std::overflow_error if it
// does not fit the rational type.
RationalPoint exact_radon(const PointSet& P, const std::vector<int>& pick) {
  const int d = P.dim();
  const int D = d + 2;
  std::vector<Vec> rows(static_cast<std::size_t>(d) + 1, Vec(static_cast<std::size_t>(D)));
  for (int j = 0; j < D; ++j) {
    for (int k = 0; k < d; ++k) rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = P[pick[static_cast<std::size_t>(j)]][k];
    rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = 1;
  }
  const Vec lambda = cross(rows, D);
  Big den = 0;
  Vec num(static_cast<std::size_t>(d), Big(0));
  for (int j = 0; j < D; ++j) {
    const Big& l = lambda[static_cast<std::size_t>(j)];
    if (l <= 0) continue;
    den += l;
    for (int k = 0; k < d; ++k) num[static_cast<std::size_t>(k)] += l * P[pick[static_cast<std::size_t>(j)]][k];
  }
  if (den == 0) throw std::overflow_error("degenerate Radon configuration");
  const Big g = boost::multiprecision::gcd(den, std::accumulate(num.begin(), num.end(), Big(0),
      [](const Big& a, const Big& x) { return boost::multiprecision::gcd(a, x); }));
  const Big limit = Big(1) << 100;
  std::vector<i128> out;
  for (auto& v : num) {
    const Big r = v / g;
    if (abs(r) >= limit) throw std::overflow_error("Radon point too large");
    out.push_back(r.convert_to<i128>());
  }
  const Big dr = den / g;
  if (dr >= limit) throw std::overflow_error("Radon point too large");
  return make_rational_point(out, dr.convert_to<i128>());
}

RationalPoint coordinate_median(const PointSet& P) {
  std::vector<i128> num;
  for (int k = 0; k < P.dim(); ++k) {
    std::vector<i64> xs;
    for (const auto& p : P) xs.push_back(p[k]);
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    num.push_back(static_cast<i128>(xs[(n - 1) / 2]) + xs[n / 2]);
  }
  return make_rational_point(num, 2);
}

RationalPoint centroid(const PointSet& P) {
  std::vector<i128> num(static_cast<std::size_t>(P.dim()), 0);
  for (const auto& p : P)
    for (int k = 0; k < P.dim(); ++k) num[static_cast<std::size_t>(k)] += p[k];
  return make_rational_point(num, P.size());
}

}  // namespace

i64 tukey_depth(const PointSet& P, const RationalPoint& c) {
  if (P.dim() != c.dim()) throw DimensionMismatch("query dimension differs from point set");
  if (P.dim() > 4) throw Unsupported("halfspace depth limited to d <= 4");
  if (P.dim() == 1) {
    i64 le = 0, ge = 0;
    for (const auto& a : P) {
      const int s = c.compare(0, a[0]);
      if (s >= 0) ++le;
      if (s <= 0) ++ge;
    }
    return std::min(le, ge);
  }
  if (P.dim() == 2) return tukey_depth_2d(P, c);
  return tukey_depth_general(P, c);
}

Centerpoint tukey_centerpoint(const PointSet& P, std::uint64_t seed, const TukeyCaps& caps,
                              int budget) {
  const int d = P.dim();
  const int n = P.size();
  if (d < 2 || d > 4) throw Unsupported("centerpoints need 2 <= d <= 4");
  if (n > caps.cap_for(d)) throw CapExceeded("too many points for the centerpoint search");
  if (n == 0) throw InvalidSpec("empty point set");
  Centerpoint out;
  out.required = (n + d) / (d + 1);
  auto attempt = [&](const RationalPoint& c, const std::string& source) {
    ++out.candidates_tried;
    const i64 depth = tukey_depth(P, c);
    if (depth >= out.required) {
      out.point = c;
      out.depth = depth;
      out.source = source;
      return true;
    }
    return false;
  };
  if (attempt(coordinate_median(P), "coordinate median")) return out;
  if (attempt(centroid(P), "centroid")) return out;
  std::mt19937_64 rng(seed);
  const int levels = d == 2 ? 3 : 2;
  const int radon_rounds = d == 2 ? 16 : 64;
  for (int r = 0; r < radon_rounds && out.candidates_tried < budget; ++r)
    if (attempt(round_rational(iterated_radon(P, rng, levels)), "iterated Radon")) return out;
  for (int i = 0; i < n && out.candidates_tried < budget; ++i)
    if (attempt(RationalPoint(P[i]), "input point")) return out;
  if (d >= 3 && n == d + 2) {
    // The depth-2 region is the single Radon point.
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    try {
      if (attempt(exact_radon(P, all), "exact Radon")) return out;
    } catch (const std::overflow_error&) {
    }
  }
  if (d >= 3) {
    std::vector<long double> center;
    long double radius = 0;
    if (depth_region_center(P, out.required, center, radius) && radius > 0) {
      long double mag = 1;
      for (auto v : center) mag = std::max(mag, std::abs(v));
      i64 den = 2;
      while (den < (i64{1} << 40) && radius * den < 4 * d) den <<= 1;
      for (int extra = 0; extra < 3 && out.candidates_tried < budget; ++extra, den <<= 4) {
        if (mag * static_cast<long double>(den) > 1e18L) break;
        std::vector<i128> num;
        for (auto v : center) num.push_back(static_cast<i128>(std::llround(v * den)));
        if (attempt(make_rational_point(num, den), "depth-region centre")) return out;
      }
    }
    // Keep drawing Radon candidates at every depth of iteration.
    for (int r = 0; out.candidates_tried < budget; ++r)
      if (attempt(round_rational(iterated_radon(P, rng, 1 + r % 3)), "iterated Radon")) return out;
  }
  if (d == 2) {
    // Vertices of the depth region are crossings of lines through two points.
    const RationalPoint med = coordinate_median(P);
    const double mx = static_cast<double>(med.approx(0));
    const double my = static_cast<double>(med.approx(1));
    std::vector<std::pair<int, int>> lines;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) lines.push_back({i, j});
    struct Cross {
      double dist;
      int l1, l2;
    };
    std::vector<Cross> crossings;
    for (std::size_t a = 0; a < lines.size(); ++a) {
      const auto& p1 = P[lines[a].first];
      const auto& p2 = P[lines[a].second];
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        const auto& q1 = P[lines[b].first];
        const auto& q2 = P[lines[b].second];
        const double rx = static_cast<double>(p2[0] - p1[0]), ry = static_cast<double>(p2[1] - p1[1]);
        const double sx = static_cast<double>(q2[0] - q1[0]), sy = static_cast<double>(q2[1] - q1[1]);
        const double den = rx * sy - ry * sx;
        if (den == 0) continue;
        const double t = ((q1[0] - p1[0]) * sy - (q1[1] - p1[1]) * sx) / den;
        const double x = static_cast<double>(p1[0]) + t * rx;
        const double y = static_cast<double>(p1[1]) + t * ry;
        crossings.push_back({std::hypot(x - mx, y - my), static_cast<int>(a), static_cast<int>(b)});
      }
    }
    std::sort(crossings.begin(), crossings.end(), [](const Cross& u, const Cross& v) {
      if (u.dist != v.dist) return u.dist < v.dist;
      return std::pair(u.l1, u.l2) < std::pair(v.l1, v.l2);
    });
    for (const auto& cr : crossings) {
      if (out.candidates_tried >= budget) break;
      const auto& p1 = P[lines[static_cast<std::size_t>(cr.l1)].first];
      const auto& p2 = P[lines[static_cast<std::size_t>(cr.l1)].second];
      const auto& q1 = P[lines[static_cast<std::size_t>(cr.l2)].first];
      const auto& q2 = P[lines[static_cast<std::size_t>(cr.l2)].second];
      const i128 rx = p2[0] - p1[0], ry = p2[1] - p1[1];
      const i128 sx = q2[0] - q1[0], sy = q2[1] - q1[1];
      const i128 den = rx * sy - ry * sx;
      const i128 tn = static_cast<i128>(q1[0] - p1[0]) * sy - static_cast<i128>(q1[1] - p1[1]) * sx;
      RationalPoint c;
      try {
        c = make_rational_point({p1[0] * den + tn * rx, p1[1] * den + tn * ry}, den);
      } catch (const std::overflow_error&) {
        continue;
      }
      if (attempt(c, "line crossing")) return out;
    }
  }
  throw CertificationFailed("no candidate reached Tukey depth " + std::to_string(out.required) +
                            " within the budget");
}

}  // namespace sel
