#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pathweave/graph.hpp"

namespace pathweave {

struct ActivationResult {
  NodeId source = 0;
  std::vector<double> activations;
  std::vector<NodeId> max_inputs;  // kNoNode where no input ever won
  unsigned iterations_used = 0;
  bool converged = false;
};

// Max-product activation propagation. All activations start at 0 except the
// source at 1; per sweep every neuron takes the maximum weighted input seen
// so far (strict >, in-place visibility), and the source is re-clamped to 1
// at the end of each sweep. Stops after max_sweeps (default N-1) sweeps, or
// on the first no-change sweep when early_stop is set.
inline ActivationResult nnbf_solve(const Network& network, NodeId source,
                                   bool early_stop,
                                   std::optional<unsigned> max_sweeps = {}) {
  const NodeId n = network.neuron_count();
  if (source >= n) {
    throw std::invalid_argument("nnbf_solve: source out of range");
  }
  ActivationResult result;
  result.source = source;
  result.activations.assign(n, 0.0);
  result.max_inputs.assign(n, kNoNode);
  result.activations[source] = 1.0;

  const unsigned budget = max_sweeps
                              ? *max_sweeps
                              : std::max<unsigned>(n - 1, 1);
  std::vector<double> before;
  for (unsigned sweep = 0; sweep < budget; ++sweep) {
    before = result.activations;
    for (NodeId i = 0; i < n; ++i) {
      for (const Connection& c : network.incoming(i)) {
        const double weighted = result.activations[c.from] * c.weight;
        if (weighted > result.activations[i]) {
          result.activations[i] = weighted;
          result.max_inputs[i] = c.from;
        }
      }
    }
    result.activations[source] = 1.0;
    ++result.iterations_used;
    if (result.activations == before) {
      result.converged = true;
      if (early_stop) break;
    }
  }
  return result;
}

// Walks maximal-input pointers backwards from target and reverses. nullopt
// when the target never received activity.
inline std::optional<std::vector<NodeId>> reconstruct_path_from_max_inputs(
    const ActivationResult& result, NodeId target) {
  const std::size_t n = result.activations.size();
  if (target >= n) {
    throw std::invalid_argument("reconstruct_path: target out of range");
  }
  if (target != result.source && result.activations[target] == 0.0) {
    return std::nullopt;
  }
  std::vector<NodeId> path;
  NodeId cursor = target;
  while (cursor != result.source) {
    path.push_back(cursor);
    cursor = result.max_inputs[cursor];
    if (cursor == kNoNode || path.size() > n) {
      throw std::runtime_error(
          "reconstruct_path: max-input walk cycles; result not converged?");
    }
  }
  path.push_back(result.source);
  std::reverse(path.begin(), path.end());
  return path;
}

// Sum of original edge costs along a node sequence.
inline double path_cost(const EdgeCostIndex& index,
                        std::span<const NodeId> path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto cost = index.cost(path[i - 1], path[i]);
    if (!cost) {
      throw std::invalid_argument("path_cost: path uses a missing edge");
    }
    total += *cost;
  }
  return total;
}

inline double path_cost(const Graph& graph, std::span<const NodeId> path) {
  return path_cost(EdgeCostIndex(graph), path);
}

}  // namespace pathweave
