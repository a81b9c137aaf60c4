#pragma once

// Reference implementations used only by tests. They deliberately share no
// code with the solvers they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "pathweave/graph.hpp"
#include "pathweave/navigation.hpp"

namespace pathweave::testing {

namespace detail {

inline void all_simple_paths(
    const std::vector<std::vector<std::pair<NodeId, double>>>& adjacency,
    NodeId node, double cost, std::uint32_t visited,
    std::vector<double>& best) {
  if (cost < best[node]) best[node] = cost;
  for (const auto& [next, edge_cost] : adjacency[node]) {
    if (visited & (1u << next)) continue;
    all_simple_paths(adjacency, next, cost + edge_cost,
                     visited | (1u << next), best);
  }
}

}  // namespace detail

// Minimum cost over every simple path from the source, by exhaustive
// enumeration. Exponential: keep |V| small (<= ~12).
inline std::vector<double> brute_force_distances(const Graph& graph,
                                                 NodeId source) {
  std::vector<std::vector<std::pair<NodeId, double>>> adjacency(
      graph.node_count());
  for (const Edge& e : graph.edges()) {
    adjacency[e.from].emplace_back(e.to, e.cost);
  }
  std::vector<double> best(graph.node_count(),
                           std::numeric_limits<double>::infinity());
  detail::all_simple_paths(adjacency, source, 0.0, 1u << source, best);
  return best;
}

// Maximum weight product over every simple path between two nodes, with the
// best path itself. Used as the planning oracle on letter networks.
inline std::pair<double, std::vector<NodeId>> max_product_path(
    const std::vector<std::vector<std::pair<NodeId, double>>>& adjacency,
    NodeId from, NodeId to) {
  double best = 0.0;
  std::vector<NodeId> best_path;
  std::vector<NodeId> stack{from};
  auto dfs = [&](auto&& self, NodeId node, double product,
                 std::uint32_t visited) -> void {
    if (node == to) {
      if (product > best) {
        best = product;
        best_path = stack;
      }
      return;
    }
    for (const auto& [next, weight] : adjacency[node]) {
      if (visited & (1u << next)) continue;
      stack.push_back(next);
      self(self, next, product * weight, visited | (1u << next));
      stack.pop_back();
    }
  };
  dfs(dfs, from, 1.0, 1u << from);
  return {best, best_path};
}

// Dijkstra over the navigation candidate edges with Euclidean lengths.
inline std::optional<double> nav_shortest_length(const NavEnvironment& env,
                                                 NodeId from, NodeId to) {
  const NodeId n = env.location_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[from] = 0.0;
  queue.push({0.0, from});
  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (d > dist[node]) continue;
    if (node == to) return d;
    for (NodeId next : env.neighbors[node]) {
      const double candidate = d + env.distance(node, next);
      if (candidate < dist[next]) {
        dist[next] = candidate;
        queue.push({candidate, next});
      }
    }
  }
  return std::nullopt;
}

// Rounds every cost to the nearest integer; families that need exact
// path-sum comparisons use this on generated graphs.
inline Graph with_integer_costs(const Graph& graph) {
  std::vector<Edge> edges = graph.edges();
  for (Edge& e : edges) e.cost = std::round(e.cost);
  return Graph(graph.node_count(), std::move(edges));
}

}  // namespace pathweave::testing
