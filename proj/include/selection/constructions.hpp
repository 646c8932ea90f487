#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "selection/point.hpp"

namespace sel {

enum class ConstructionKind {
  Circle,
  Semicircle,
  DecreasingChain,
  IncreasingLine,
  UniformGrid,
  ThreeArc,
  RandomGeneral,
  RandomSymmetric,
};

std::string construction_name(ConstructionKind k);
ConstructionKind parse_construction(const std::string& s);

// Triangle vertex angles (degrees, summing to 180) and the half-width of each
// arc (degrees, measured at the arc's centre). Arc X is centred at the next
// vertex in the cycle A -> B -> C -> A. The arcs are tiny and the middle one
// must keep its chord directions accurate to about its spacing over the
// circumradius, which integer rounding only allows at a large radius; this
// construction therefore uses its own radius instead of ConstructionSpec::scale.
struct ThreeArcParams {
  std::array<double, 3> vertex_deg{89.7, 0.6, 89.7};
  std::array<double, 3> half_width_deg{0.00136, 0.000034, 0.0245};
  i64 radius = i64{1} << 50;
};

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::Circle;
  int n = 0;
  int d = 2;
  i64 scale = 1'000'000;
  std::uint64_t seed = 0;
  ThreeArcParams arcs{};

  std::string describe() const;
};

// Integer realization of the construction. Throws InvalidSpec.
PointSet generate(const ConstructionSpec& spec);

// Class label (0 = A, 1 = B, 2 = C) of each point of a ThreeArc set of size n.
std::vector<int> three_arc_classes(int n);

// Deterministic uniform integer in [lo, hi] from a 64-bit engine (the
// standard distributions are implementation-defined, this is not).
i64 uniform_int(std::mt19937_64& rng, i64 lo, i64 hi);

// Rejection-sampled set with pairwise-distinct coordinates on every axis.
// Symmetric mode emits +p/-p pairs with distinct origin distances. Default
// coordinate range is max(4n^2, 1000).
PointSet random_point_set(int n, int d, std::uint64_t seed, bool symmetric = false,
                          i64 range = 0);

struct ObtuseViolation {
  std::array<int, 3> triple;
  std::string reason;
};

struct ObtuseReport {
  bool holds = true;
  i64 obtuse_triples = 0;
  std::vector<ObtuseViolation> violations;
};

// Checks that the obtuse triangles of P are exactly those whose class pattern
// is AAA, BBB, CCC, ABB, BCC or CAA. Right or degenerate triangles are
// violations.
ObtuseReport verify_obtuse_pattern(const PointSet& P, const std::vector<int>& classes,
                                   std::size_t max_reported = 32);

}  // namespace sel
