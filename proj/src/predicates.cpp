#include "selection/predicates.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace sel {

namespace {

using Wide = boost::multiprecision::int512_t;

Wide widen(i128 v) {
  // int512_t has no direct __int128 constructor; assemble from two halves.
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  Wide hi = static_cast<std::uint64_t>(mag >> 64);
  Wide lo = static_cast<std::uint64_t>(mag);
  Wide out = (hi << 64) | lo;
  return neg ? Wide(-out) : out;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

bool all_below(std::span<const i128> xs, i128 limit) {
  return std::all_of(xs.begin(), xs.end(), [&](i128 x) { return abs128(x) < limit; });
}

template <class T>
int sign_of(const T& v) {
  return (v > 0) - (v < 0);
}

constexpr i128 bit(int k) { return static_cast<i128>(1) << k; }

Wide det_wide(const std::vector<std::vector<Wide>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Wide total = 0;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Wide>> minor;
    minor.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Wide> row;
      row.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Wide term = m[0][col] * det_wide(minor);
    total += (col % 2 == 0) ? term : Wide(-term);
  }
  return total;
}

i128 det_native(const std::vector<std::vector<i128>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  i128 total = 0;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<i128>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<i128> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    i128 term = m[0][col] * det_native(minor);
    total += (col % 2 == 0) ? term : -term;
  }
  return total;
}

bool strictly_between(const RationalPoint& p, int k, i64 a, i64 b) {
  const i64 lo = std::min(a, b);
  const i64 hi = std::max(a, b);
  return p.compare(k, lo) > 0 && p.compare(k, hi) < 0;
}

// c_k(p) < bound for the sheared triangle functionals at a rational point.
bool tri_below(const RationalPoint& p, int k, i64 bound) {
  const i128 u = p.num[0];
  const i128 v = p.num[1];
  const i128 value = k == 0 ? -u - v : (k == 1 ? u : v);
  return value < static_cast<i128>(bound) * p.den;
}

}  // namespace

int sign_dot(std::span<const i128> u, std::span<const i128> v) {
  if (all_below(u, bit(61)) && all_below(v, bit(61))) {
    i128 s = 0;
    for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
    return sign_of(s);
  }
  Wide s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += widen(u[k]) * widen(v[k]);
  return sign_of(s);
}

int sign_cross(i128 ux, i128 uy, i128 vx, i128 vy) {
  if (abs128(ux) < bit(62) && abs128(uy) < bit(62) && abs128(vx) < bit(62) &&
      abs128(vy) < bit(62))
    return sign_of(ux * vy - uy * vx);
  return sign_of(Wide(widen(ux) * widen(vy) - widen(uy) * widen(vx)));
}

int sign_det(const std::vector<std::vector<i128>>& rows) {
  const std::size_t k = rows.size();
  const int limit_bits = k <= 2 ? 62 : (k == 3 ? 40 : 30);
  bool small = true;
  for (const auto& r : rows)
    if (!all_below(r, bit(limit_bits))) small = false;
  if (small) return sign_of(det_native(rows));
  std::vector<std::vector<Wide>> w;
  w.reserve(k);
  for (const auto& r : rows) {
    std::vector<Wide> row;
    row.reserve(r.size());
    for (i128 x : r) row.push_back(widen(x));
    w.push_back(std::move(row));
  }
  return sign_of(det_wide(w));
}

std::vector<i128> scaled_offset(const Point& a, const RationalPoint& p) {
  std::vector<i128> out(static_cast<std::size_t>(a.dim()));
  for (int k = 0; k < a.dim(); ++k)
    out[static_cast<std::size_t>(k)] =
        static_cast<i128>(a[k]) * p.den - p.num[static_cast<std::size_t>(k)];
  return out;
}

int containment_count(Family family, const Point& a, const Point& b, const RationalPoint& p) {
  if (a.dim() != p.dim() || b.dim() != p.dim())
    throw DimensionMismatch("query dimension differs from inducing points");
  switch (family) {
    case Family::Rectangle:
    case Family::Box:
    case Family::Interval:
      for (int k = 0; k < p.dim(); ++k)
        if (!strictly_between(p, k, a[k], b[k])) return 0;
      return 1;
    case Family::VSlab:
      return strictly_between(p, 0, a[0], b[0]) ? 1 : 0;
    case Family::HSlab:
      return strictly_between(p, 1, a[1], b[1]) ? 1 : 0;
    case Family::SlabBoth:
      return (strictly_between(p, 0, a[0], b[0]) ? 1 : 0) +
             (strictly_between(p, 1, a[1], b[1]) ? 1 : 0);
    case Family::Skyline:
      return strictly_between(p, 0, a[0], b[0]) && p.compare(1, std::max(a[1], b[1])) < 0 ? 1
                                                                                          : 0;
    case Family::Quadrant:
      // Apex is the componentwise minimum of the pair; quadrant opens to +x,+y.
      return p.compare(0, std::min(a[0], b[0])) > 0 && p.compare(1, std::min(a[1], b[1])) > 0
                 ? 1
                 : 0;
    case Family::Disk:
    case Family::Hypersphere: {
      const auto u = scaled_offset(a, p);
      const auto v = scaled_offset(b, p);
      return sign_dot(u, v) < 0 ? 1 : 0;
    }
    case Family::DownTriangle:
      for (int k = 0; k < 3; ++k) {
        const i64 bound =
            std::max(tri_functional(k, a[0], a[1]), tri_functional(k, b[0], b[1]));
        if (!tri_below(p, k, bound)) return 0;
      }
      return 1;
  }
  return 0;
}

bool contains(Family family, const Point& a, const Point& b, const RationalPoint& p) {
  return containment_count(family, a, b, p) > 0;
}

bool contains_closed(Family family, const Point& a, const Point& b, const Point& p) {
  auto within = [](i64 x, i64 lo, i64 hi) { return std::min(lo, hi) <= x && x <= std::max(lo, hi); };
  switch (family) {
    case Family::Rectangle:
    case Family::Box:
    case Family::Interval:
      for (int k = 0; k < p.dim(); ++k)
        if (!within(p[k], a[k], b[k])) return false;
      return true;
    case Family::VSlab:
      return within(p[0], a[0], b[0]);
    case Family::HSlab:
      return within(p[1], a[1], b[1]);
    case Family::SlabBoth:
      return within(p[0], a[0], b[0]) || within(p[1], a[1], b[1]);
    case Family::Skyline:
      return within(p[0], a[0], b[0]) && p[1] <= std::max(a[1], b[1]);
    case Family::Quadrant:
      return p[0] >= std::min(a[0], b[0]) && p[1] >= std::min(a[1], b[1]);
    case Family::Disk:
    case Family::Hypersphere: {
      i128 s = 0;
      for (int k = 0; k < p.dim(); ++k)
        s += static_cast<i128>(a[k] - p[k]) * (b[k] - p[k]);
      return s <= 0;
    }
    case Family::DownTriangle:
      for (int k = 0; k < 3; ++k) {
        const i64 bound =
            std::max(tri_functional(k, a[0], a[1]), tri_functional(k, b[0], b[1]));
        if (tri_functional(k, p[0], p[1]) > bound) return false;
      }
      return true;
  }
  return false;
}

}  // namespace sel
