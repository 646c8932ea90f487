#include "selection/point.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sel {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX);
}

}  // namespace

RationalPoint::RationalPoint(std::vector<i64> n, i64 d) : num(std::move(n)), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  i64 g = den;
  for (i64 x : num) g = std::gcd(g, x);
  if (g > 1) {
    den /= g;
    for (auto& x : num) x /= g;
  }
}

bool RationalPoint::equals(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (int k = 0; k < dim(); ++k)
    if (compare(k, p[k]) != 0) return false;
  return true;
}

int RationalPoint::compare(int k, i64 value) const {
  i128 lhs = num[static_cast<std::size_t>(k)];
  i128 rhs = static_cast<i128>(value) * den;
  return (lhs > rhs) - (lhs < rhs);
}

std::string RationalPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < dim(); ++k) {
    if (k) os << ", ";
    i64 n = num[static_cast<std::size_t>(k)];
    i64 g = std::gcd(n, den);
    if (g == 0) g = 1;
    os << n / g;
    if (den / g != 1) os << '/' << den / g;
  }
  os << ')';
  return os.str();
}

RationalPoint make_rational_point(const std::vector<i128>& num, i128 den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  std::vector<i128> n = num;
  if (den < 0) {
    den = -den;
    for (auto& x : n) x = -x;
  }
  i128 g = den;
  for (i128 x : n) g = gcd128(g, x);
  std::vector<i64> out;
  out.reserve(n.size());
  for (i128 x : n) {
    i128 r = x / g;
    if (!fits64(r)) throw std::overflow_error("rational coordinate exceeds 64 bits");
    out.push_back(static_cast<i64>(r));
  }
  i128 d = den / g;
  if (!fits64(d)) throw std::overflow_error("rational denominator exceeds 64 bits");
  return RationalPoint(std::move(out), static_cast<i64>(d));
}

PointSet::PointSet(int dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw InvalidSpec("dimension must be at least 1");
  std::set<std::vector<i64>> seen;
  for (const auto& p : points_) {
    if (p.dim() != dim_) throw DimensionMismatch("point dimension differs from set dimension");
    for (i64 c : p.coords)
      if (c > kMaxCoord || c < -kMaxCoord)
        throw InvalidSpec("coordinate magnitude exceeds 2^52");
    if (!seen.insert(p.coords).second) throw InvalidSpec("duplicate point");
  }
}

int PointSet::index_of(const RationalPoint& p) const {
  if (p.dim() != dim_) return -1;
  for (int i = 0; i < size(); ++i)
    if (p.equals((*this)[i])) return i;
  return -1;
}

bool PointSet::is_centrally_symmetric() const {
  std::set<std::vector<i64>> all;
  for (const auto& p : points_) all.insert(p.coords);
  for (const auto& p : points_) {
    std::vector<i64> neg = p.coords;
    for (auto& c : neg) c = -c;
    if (!all.count(neg)) return false;
  }
  return true;
}

}  // namespace sel
