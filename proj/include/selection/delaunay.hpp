#pragma once

#include <utility>
#include <vector>

#include "selection/family.hpp"
#include "selection/point.hpp"

namespace sel {

using Edge = std::pair<int, int>;

// Pairs {a, b} whose induced object strictly contains no other point of P.
// Naive cubic scan with the exact predicates.
std::vector<Edge> delaunay_graph(const PointSet& P, Family family);

struct PlanarityResult {
  bool edge_bound = false;  // |E| <= 3n - 6 (or n < 3)
  bool planar = false;      // full combinatorial planarity test
  bool ok() const { return edge_bound && planar; }
};

PlanarityResult planarity_check(const std::vector<Edge>& edges, int n);

}  // namespace sel
