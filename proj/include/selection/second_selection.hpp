#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "selection/family.hpp"
#include "selection/point.hpp"

namespace sel {

// m distinct unordered index pairs (i < j) of a point set.
struct InducedSubset {
  Family family = Family::Interval;
  std::vector<std::pair<int, int>> pairs;
  i64 m() const { return static_cast<i64>(pairs.size()); }
};

// Uniform sample of m distinct pairs, sorted, deterministic in seed.
// Throws MTooLarge when m exceeds C(n, 2).
InducedSubset sample_subset(const PointSet& P, Family family, i64 m, std::uint64_t seed);

// Subset file: "pairs <m>" then m lines "i j".
InducedSubset read_subset(std::istream& in, Family family);
void write_subset(std::ostream& out, const InducedSubset& S);

// Closed-containment counts I_p of the intervals of C at every point of a
// one-dimensional P.
struct IntervalProfile {
  std::vector<i64> count;  // indexed like P
  int argmax = -1;
  i64 max = 0;
  bool meets_lower_bound = false;  // max >= m^2/(2n^2) + 3m/(2n) - 1
};
IntervalProfile interval_depth_profile(const PointSet& P, const InducedSubset& C);

// Exact test of max >= m^2/(2n^2) + 3m/(2n) - 1.
bool interval_lower_bound_holds(i64 max, i64 m, i64 n);

// Points 0..n-1 on a line and m short intervals: runs of the ceil(sqrt(2) m/n)
// nearest right neighbours, ordered by length then left end.
struct IntervalConstruction {
  PointSet points;
  InducedSubset subset;
  i64 k = 0;
};
IntervalConstruction gen_interval_upper(int n, i64 m);

// I_g for every grid point g = (xs[i], ys[j]) under closed containment.
struct GridDepthMap {
  std::vector<i64> xs, ys;  // sorted coordinates
  std::vector<i64> depth;   // depth[i * ys.size() + j]
  int gx = 0, gy = 0;       // argmax indices (first in row-major order)
  i64 max = 0;
  i64 total = 0;            // sum over the grid
  bool meets_cubic_bound = false;  // max >= m^3 / (24 n^4)
  i64 at(int i, int j) const { return depth[static_cast<std::size_t>(i) * ys.size() + static_cast<std::size_t>(j)]; }
  void write_csv(std::ostream& out) const;
};
GridDepthMap grid_depth_map(const PointSet& P, const InducedSubset& S);

// J_r: grid points inside each rectangle of S (closed).
std::vector<i64> rectangle_grid_counts(const PointSet& P, const InducedSubset& S);

// Each rectangle goes to its lower endpoint x_i, split by whether the partner
// lies to the right (right[i]) or left (left[i]); both lists hold positions in
// S.pairs ordered by decreasing partner y.
struct PartitionX {
  std::vector<std::vector<int>> right, left;
};
PartitionX partition_rectangles(const PointSet& P, const InducedSubset& S);

struct CubicEntry {
  int base = 0;
  bool right_side = true;
  i64 m = 0;
  i64 sum_j = 0;
  bool holds = false;  // 6 * sum_j >= m^3
};
struct CubicReport {
  std::vector<CubicEntry> entries;  // nonempty parts only
  bool holds = true;
};
CubicReport check_cubic_lemma(const PointSet& P, const InducedSubset& S);

// Groups the intervals of C by left endpoint; within a group the j-th
// interval by right endpoint (1-based) must contain at least j + 1 points.
bool interval_partition_sanity(const PointSet& P, const InducedSubset& C);

}  // namespace sel
