#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathweave/graph.hpp"

namespace pathweave {

inline constexpr double kInfDistance = std::numeric_limits<double>::infinity();

struct ShortestPathResult {
  NodeId source = 0;
  std::vector<double> distances;      // +inf for unreachable nodes
  std::vector<NodeId> predecessors;   // kNoNode where undefined
  unsigned iterations_used = 0;       // completed sweeps
  bool converged = false;             // a no-change sweep occurred in budget
  bool negative_cycle_detected = false;
};

namespace detail {

// The degenerate one-node instance still runs a single (empty) sweep so
// iteration counts stay comparable across solvers.
inline unsigned sweep_budget(NodeId node_count,
                             std::optional<unsigned> max_sweeps) {
  if (max_sweeps) return *max_sweeps;
  return std::max<unsigned>(node_count - 1, 1);
}

}  // namespace detail

// Edge-relaxation form: every sweep scans the whole edge list in input
// order, updating distances in place. Without early_stop the full sweep
// budget (|V|-1) is spent; with it the run stops after the first sweep
// that changes nothing.
inline ShortestPathResult bf_v1(const Graph& graph, NodeId source,
                                bool early_stop,
                                std::optional<unsigned> max_sweeps = {}) {
  const NodeId n = graph.node_count();
  if (source >= n) {
    throw std::invalid_argument("bf_v1: source out of range");
  }
  ShortestPathResult result;
  result.source = source;
  result.distances.assign(n, kInfDistance);
  result.predecessors.assign(n, kNoNode);
  result.distances[source] = 0.0;

  const unsigned budget = detail::sweep_budget(n, max_sweeps);
  for (unsigned sweep = 0; sweep < budget; ++sweep) {
    bool changed = false;
    for (const Edge& e : graph.edges()) {
      const double candidate = result.distances[e.from] + e.cost;
      if (candidate < result.distances[e.to]) {
        result.distances[e.to] = candidate;
        result.predecessors[e.to] = e.from;
        changed = true;
      }
    }
    ++result.iterations_used;
    if (!changed) {
      result.converged = true;
      if (early_stop) break;
    }
  }
  return result;
}

// Node-relaxation form: per sweep, every vertex v != source relaxes over
// its incoming edges. Distances are read in place, so updates made earlier
// in a sweep are visible to later vertices of the same sweep.
inline ShortestPathResult bf_v2(const Graph& graph, NodeId source,
                                bool early_stop,
                                std::optional<unsigned> max_sweeps = {}) {
  const NodeId n = graph.node_count();
  if (source >= n) {
    throw std::invalid_argument("bf_v2: source out of range");
  }
  std::vector<std::vector<std::pair<NodeId, double>>> incoming(n);
  for (const Edge& e : graph.edges()) {
    incoming[e.to].emplace_back(e.from, e.cost);
  }

  ShortestPathResult result;
  result.source = source;
  result.distances.assign(n, kInfDistance);
  result.predecessors.assign(n, kNoNode);
  result.distances[source] = 0.0;

  const unsigned budget = detail::sweep_budget(n, max_sweeps);
  for (unsigned sweep = 0; sweep < budget; ++sweep) {
    bool changed = false;
    for (NodeId v = 0; v < n; ++v) {
      if (v == source) continue;
      for (const auto& [u, cost] : incoming[v]) {
        const double candidate = result.distances[u] + cost;
        if (candidate < result.distances[v]) {
          result.distances[v] = candidate;
          result.predecessors[v] = u;
          changed = true;
        }
      }
    }
    ++result.iterations_used;
    if (!changed) {
      result.converged = true;
      if (early_stop) break;
    }
  }
  return result;
}

// True iff one more full edge sweep would still lower some distance, which
// after a full relaxation budget can only happen on a negative cycle
// reachable from the source. Sets the result's flag as a side effect.
inline bool detect_negative_cycle(const Graph& graph,
                                  ShortestPathResult& result) {
  for (const Edge& e : graph.edges()) {
    if (result.distances[e.from] + e.cost < result.distances[e.to]) {
      result.negative_cycle_detected = true;
      return true;
    }
  }
  return false;
}

// Walks predecessors backwards from target and reverses. nullopt when the
// target is unreachable; a walk longer than |V| nodes means the predecessor
// list does not form a tree and is reported as corrupted input.
inline std::optional<std::vector<NodeId>> reconstruct_path(
    const ShortestPathResult& result, NodeId target) {
  const std::size_t n = result.distances.size();
  if (target >= n) {
    throw std::invalid_argument("reconstruct_path: target out of range");
  }
  if (result.distances[target] == kInfDistance) return std::nullopt;
  std::vector<NodeId> path;
  NodeId cursor = target;
  while (cursor != result.source) {
    path.push_back(cursor);
    cursor = result.predecessors[cursor];
    if (cursor == kNoNode || path.size() > n) {
      throw std::runtime_error("reconstruct_path: predecessor walk cycles");
    }
  }
  path.push_back(result.source);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace pathweave
