#pragma once

#include <cstdint>
#include <string>

#include "selection/point.hpp"

namespace sel {

// Exact halfspace (Tukey) depth of c: the minimum number of points of P in a
// closed halfspace whose boundary passes through c. Supports 1 <= d <= 4.
i64 tukey_depth(const PointSet& P, const RationalPoint& c);

struct TukeyCaps {
  int d2 = 60;
  int d3 = 24;
  int d4 = 16;
  int cap_for(int d) const { return d == 2 ? d2 : (d == 3 ? d3 : d4); }
};

struct Centerpoint {
  RationalPoint point;
  i64 depth = 0;     // certified by tukey_depth
  i64 required = 0;  // ceil(n / (d + 1))
  int candidates_tried = 0;
  std::string source;  // which proposal succeeded
};

// Point of certified Tukey depth >= ceil(n/(d+1)). Deterministic in seed.
// Throws CapExceeded or CertificationFailed.
Centerpoint tukey_centerpoint(const PointSet& P, std::uint64_t seed = 0,
                              const TukeyCaps& caps = {}, int budget = 4000);

}  // namespace sel
