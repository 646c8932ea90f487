#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "selection/family.hpp"
#include "selection/point.hpp"

namespace sel {

// Open-quadrant cardinalities around a query point:
// A = NW (x < p.x, y > p.y), B = NE, C = SE, D = SW.
struct QuadrantCounts {
  i64 A = 0, B = 0, C = 0, D = 0;
  i64 total() const { return A + B + C + D; }
  friend bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
};

enum class Engine { Brute, Fast };

struct DepthResult {
  RationalPoint query;
  Family family{};
  i64 depth = 0;
  Engine engine = Engine::Brute;
};

struct Violation {
  enum class Kind { SharedCoordinate, CoCircular } kind;
  int axis = -1;               // for SharedCoordinate
  std::vector<int> indices;    // offending points
  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool cocircularity_checked = false;
  bool ok() const { return violations.empty(); }
};

// Reports every shared coordinate per axis and, for d = 2 with
// n <= cocircular_cap, every co-circular 4-subset. Marks P on success.
ValidationReport validate_general_position(PointSet& P, int cocircular_cap = 64);
ValidationReport validate_general_position(const PointSet& P, int cocircular_cap = 64);

// Throws CoordinateTie if a point other than p itself lies on a grid line
// through p. p is excluded from the counts when it belongs to P.
QuadrantCounts quadrant_counts(const PointSet& P, const RationalPoint& p);

// Closed-form depth from quadrant counts (families with is_quadrant_family).
i64 depth_from_counts(Family family, const QuadrantCounts& q);

// Counts every unordered pair {a, b} of P \ {p} whose induced object strictly
// contains p (SlabBoth pairs contribute 0, 1 or 2).
DepthResult depth_brute(const PointSet& P, Family family, const RationalPoint& p);

// Closed forms for the quadrant families, orthant counting for boxes and an
// angular sweep for disks. Families without a fast path fall back to the
// brute engine and report Engine::Brute.
DepthResult depth_fast(const PointSet& P, Family family, const RationalPoint& p);

// Disk depth by the angular sweep: pairs whose directions from p form an
// angle above 90 degrees.
i64 disk_depth_sweep(const PointSet& P, const RationalPoint& p);

// Box depth in any dimension by counting points per open orthant around p.
i64 box_depth_orthants(const PointSet& P, const RationalPoint& p);

// Upper limit on depth: number of inducing pairs (times two for SlabBoth).
i64 max_possible_depth(Family family, int n);

}  // namespace sel
