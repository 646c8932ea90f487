#include "selection/delaunay.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "selection/predicates.hpp"

namespace sel {

std::vector<Edge> delaunay_graph(const PointSet& P, Family family) {
  require_family(family, P.dim());
  std::vector<Edge> edges;
  for (int a = 0; a < P.size(); ++a)
    for (int b = a + 1; b < P.size(); ++b) {
      bool empty = true;
      for (int c = 0; c < P.size() && empty; ++c)
        if (c != a && c != b && contains(family, P[a], P[b], P[c])) empty = false;
      if (empty) edges.push_back({a, b});
    }
  return edges;
}

PlanarityResult planarity_check(const std::vector<Edge>& edges, int n) {
  PlanarityResult r;
  r.edge_bound = n < 3 || static_cast<long long>(edges.size()) <= 3LL * n - 6;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(static_cast<std::size_t>(std::max(n, 0)));
  for (const auto& [a, b] : edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), g);
  r.planar = boost::boyer_myrvold_planarity_test(g);
  return r;
}

}  // namespace sel
