#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "selection/depth.hpp"
#include "selection/family.hpp"
#include "selection/point.hpp"
#include "selection/tukey.hpp"

namespace sel {

struct PiercingResult {
  RationalPoint point;
  i64 depth = 0;
  int index = -1;  // position in P for strong results
  std::string certificate;
};

// Maximum depth over the family's candidate set (see README for the sets).
// Disk candidates include circle crossings, so Disk is capped at disk_cap points.
PiercingResult weak_max(const PointSet& P, Family family, int disk_cap = 48);

// Exact maximum over members of P, ties to the smallest index.
PiercingResult strong_max(const PointSet& P, Family family);

// Member of P all of whose four open axis halfplanes hold at most
// floor(3n/4) points. Picks the member minimizing the largest of the four
// counts, ties to the smallest index.
int strong_rect_centerpoint(const PointSet& P);

// Largest of the four open halfplane counts at P[i].
i64 max_halfplane_count(const PointSet& P, int i);

// Member of P in the region right of the vertical line with ceil(n/2)-1
// points to its left and above the horizontal line with ceil(n/2)-1 points
// below it; the deepest such member for quadrants.
int quadrant_strong_point(const PointSet& P);

// Member of P between the vertical lines leaving ceil(n/3)-1 points on each
// side and below the horizontal line with ceil(n/3) points above it; the
// deepest such member for skylines.
int skyline_strong_point(const PointSet& P);

// Farthest-pair peeling of an origin-symmetric planar set. Returns the index
// of a member of the last pair. Throws NotSymmetric.
int symmetric_peel(const PointSet& P);

// Centerpoint (or the origin for symmetric sets) and its hypersphere depth.
PiercingResult hypersphere_weak_point(const PointSet& P, std::uint64_t seed = 0,
                                      const TukeyCaps& caps = {});

// Induction on the dimension: weak rectangle maximum in the plane, then a
// best point on the vertical line over the lower-dimensional answer.
PiercingResult box_point_recursive(const PointSet& P);

using Rational = boost::rational<i64>;

enum class BoundDirection { Lower, Upper };
enum class Finder { Max, Constructive };

struct BoundSpec {
  Family family = Family::Rectangle;
  Variant variant = Variant::Strong;
  Rational coefficient{0};
  i64 slack = 0;
  BoundDirection direction = BoundDirection::Lower;
  Finder finder = Finder::Max;
  TukeyCaps caps{};  // for the centerpoint-based hypersphere finder
};

struct BoundCheck {
  Family family{};
  Variant variant{};
  int n = 0;
  int d = 0;
  Rational coefficient{0};
  i64 slack = 0;
  BoundDirection direction = BoundDirection::Lower;
  i64 observed = 0;
  Rational required{0};
  bool holds = false;
  RationalPoint point;
  std::string certificate;
  std::uint64_t seed = 0;
};

// The library's lower bound c*n^2 - s*n for a family, variant and dimension,
// or nullopt when none is asserted (slabs in one direction, down-triangles,
// strong boxes and hyperspheres). Finder is Constructive.
std::optional<BoundSpec> default_bound(Family family, Variant variant, int d);

// c*n^2 - s*n for lower bounds, c*n^2 + s*n for upper-bound witnesses.
Rational required_depth(const BoundSpec& spec, int n);

// Runs the finder matching the spec and compares against the bound.
BoundCheck verify_first_selection(const PointSet& P, const BoundSpec& spec,
                                  std::uint64_t seed = 0);

}  // namespace sel
