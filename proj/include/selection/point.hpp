#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sel {

using i64 = std::int64_t;
using i128 = __int128;

// Within kCoordLimit every degree-2 predicate fits the native 128-bit path.
// Larger coordinates (up to kMaxCoord) are accepted and take the
// multiprecision fallback in predicates.cpp.
inline constexpr i64 kCoordLimit = i64{1} << 30;
inline constexpr i64 kMaxCoord = i64{1} << 52;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SEL_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

SEL_DEFINE_ERROR(CoordinateTie);
SEL_DEFINE_ERROR(DimensionMismatch);
SEL_DEFINE_ERROR(CapExceeded);
SEL_DEFINE_ERROR(CertificationFailed);
SEL_DEFINE_ERROR(NotSymmetric);
SEL_DEFINE_ERROR(NotFound);
SEL_DEFINE_ERROR(InvalidSpec);
SEL_DEFINE_ERROR(RetryExhausted);
SEL_DEFINE_ERROR(MTooLarge);
SEL_DEFINE_ERROR(InvalidRange);
SEL_DEFINE_ERROR(ParseError);
SEL_DEFINE_ERROR(Unsupported);

#undef SEL_DEFINE_ERROR

struct Point {
  std::vector<i64> coords;

  Point() = default;
  explicit Point(std::vector<i64> c) : coords(std::move(c)) {}
  Point(std::initializer_list<i64> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  i64 operator[](int k) const { return coords[static_cast<std::size_t>(k)]; }
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// A point with rational coordinates num[k] / den sharing one positive
// denominator. Used for weak-variant query points; never stored in a PointSet.
struct RationalPoint {
  std::vector<i64> num;
  i64 den = 1;

  RationalPoint() = default;
  RationalPoint(std::vector<i64> n, i64 d);
  RationalPoint(const Point& p) : num(p.coords), den(1) {}  // NOLINT(implicit)

  int dim() const { return static_cast<int>(num.size()); }
  long double approx(int k) const {
    return static_cast<long double>(num[static_cast<std::size_t>(k)]) /
           static_cast<long double>(den);
  }
  bool is_integral() const { return den == 1; }
  bool equals(const Point& p) const;
  // Exact comparison of coordinate k against an integer value: -1, 0, +1.
  int compare(int k, i64 value) const;
  std::string to_string() const;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Builds num/den in lowest terms with den > 0. Throws std::overflow_error if
// the reduced fraction does not fit 64 bits.
RationalPoint make_rational_point(const std::vector<i128>& num, i128 den);

class PointSet {
 public:
  PointSet() = default;
  // Validates dimension consistency, magnitude cap and distinctness.
  PointSet(int dim, std::vector<Point> points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool general_position_checked() const { return general_position_checked_; }
  void mark_general_position() { general_position_checked_ = true; }

  // Index of p in the set, or -1.
  int index_of(const RationalPoint& p) const;
  bool is_centrally_symmetric() const;

 private:
  int dim_ = 0;
  std::vector<Point> points_;
  bool general_position_checked_ = false;
};

}  // namespace sel
