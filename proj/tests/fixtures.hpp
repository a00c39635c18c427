#pragma once

#include <vector>

#include "paradox/graph.hpp"

namespace paradox::testing {

// Path A - B - C with e(A,B) = 1, e(B,C) = 2 and attribute (2, 0, 1).
inline Graph path3(bool with_attribute = true) {
  const std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 2.0}};
  if (!with_attribute) return Graph::build(3, edges, std::nullopt, {"A", "B", "C"});
  return Graph::build(3, edges, std::vector<double>{2.0, 0.0, 1.0}, {"A", "B", "C"});
}

// Cycle on n nodes with unit weights.
inline Graph cycle(std::size_t n, double weight = 1.0) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n), weight});
  return Graph::build(n, edges);
}

// Star with `leaves` leaves around node 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return Graph::build(leaves + 1, edges);
}

}  // namespace paradox::testing
