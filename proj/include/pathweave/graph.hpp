#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pathweave/rng.hpp"

namespace pathweave {

using NodeId = std::uint32_t;

// Sentinel for "no predecessor" / "no maximal input".
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId from;
  NodeId to;
  double cost;
};

// Directed weighted graph as an edge list. Immutable after construction;
// edge order is preserved because the solvers' tie-breaking and sweep
// semantics depend on it.
class Graph {
 public:
  Graph(NodeId node_count, std::vector<Edge> edges)
      : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ == 0) {
      throw std::invalid_argument("graph: node_count must be positive");
    }
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (e.from >= node_count_ || e.to >= node_count_) {
        throw std::invalid_argument("graph: edge endpoint out of range");
      }
      if (e.from == e.to) {
        throw std::invalid_argument("graph: self-loops are not allowed");
      }
      const std::uint64_t key =
          (static_cast<std::uint64_t>(e.from) << 32) | e.to;
      if (!seen.insert(key).second) {
        throw std::invalid_argument("graph: duplicate edge " +
                                    std::to_string(e.from) + " -> " +
                                    std::to_string(e.to));
      }
    }
  }

  NodeId node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  NodeId node_count_;
  std::vector<Edge> edges_;
};

struct CostRange {
  double lo;
  double hi;
};

struct GeneratorConfig {
  NodeId node_count = 0;
  double edge_prob = 0.0;              // p_e
  CostRange pos_cost_range{1.0, 100.0};
  CostRange neg_cost_range{-10.0, -1.0};
  double neg_prob = 0.0;               // p_n
  std::uint64_t seed = 0;
};

inline void validate(const GeneratorConfig& config) {
  if (config.node_count == 0) {
    throw std::invalid_argument("generator: node_count must be positive");
  }
  if (config.edge_prob < 0.0 || config.edge_prob > 1.0) {
    throw std::invalid_argument("generator: edge_prob outside [0, 1]");
  }
  if (config.neg_prob < 0.0 || config.neg_prob > 1.0) {
    throw std::invalid_argument("generator: neg_prob outside [0, 1]");
  }
  if (config.pos_cost_range.lo <= 0.0 ||
      config.pos_cost_range.lo > config.pos_cost_range.hi) {
    throw std::invalid_argument("generator: pos_cost_range must be positive");
  }
  if (config.neg_prob > 0.0 &&
      (config.neg_cost_range.hi >= 0.0 ||
       config.neg_cost_range.lo > config.neg_cost_range.hi)) {
    throw std::invalid_argument("generator: neg_cost_range must be negative");
  }
}

// Each ordered pair (u, v), u != v, receives an edge independently with
// probability edge_prob; costs are drawn from neg_cost_range with
// probability neg_prob, otherwise from pos_cost_range. Pair visitation is
// u-major, so a (config, seed) pair maps to exactly one edge list.
inline Graph generate_random_graph(const GeneratorConfig& config) {
  validate(config);
  rng::Stream stream(config.seed);
  std::vector<Edge> edges;
  const NodeId n = config.node_count;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      if (!stream.bernoulli(config.edge_prob)) continue;
      const CostRange& range = stream.bernoulli(config.neg_prob)
                                   ? config.neg_cost_range
                                   : config.pos_cost_range;
      edges.push_back({u, v, stream.uniform(range.lo, range.hi)});
    }
  }
  return Graph(n, std::move(edges));
}

// w = 1 - cost / K
inline double cost_to_weight(double cost, double k) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("cost_to_weight: K must be positive");
  }
  return 1.0 - cost / k;
}

struct Connection {
  NodeId from;
  double weight;
  double cost;  // original edge cost, kept for path-cost audits
};

// Per-neuron incoming connection lists, mirroring a graph's edges. Incoming
// lists keep input edge order so sweeps visit connections deterministically.
class Network {
 public:
  Network(NodeId neuron_count, std::vector<std::vector<Connection>> incoming)
      : neuron_count_(neuron_count), incoming_(std::move(incoming)) {
    if (neuron_count_ == 0) {
      throw std::invalid_argument("network: neuron_count must be positive");
    }
    if (incoming_.size() != neuron_count_) {
      throw std::invalid_argument("network: incoming list size mismatch");
    }
  }

  NodeId neuron_count() const { return neuron_count_; }
  const std::vector<Connection>& incoming(NodeId neuron) const {
    return incoming_[neuron];
  }

 private:
  NodeId neuron_count_;
  std::vector<std::vector<Connection>> incoming_;
};

inline Network graph_to_network(const Graph& graph, double k) {
  std::vector<std::vector<Connection>> incoming(graph.node_count());
  for (const Edge& e : graph.edges()) {
    incoming[e.to].push_back({e.from, cost_to_weight(e.cost, k), e.cost});
  }
  return Network(graph.node_count(), std::move(incoming));
}

// Hashed (u, v) -> cost lookup for repeated path-cost audits on one graph.
class EdgeCostIndex {
 public:
  explicit EdgeCostIndex(const Graph& graph) : node_count_(graph.node_count()) {
    cost_.reserve(graph.edges().size());
    for (const Edge& e : graph.edges()) {
      cost_.emplace((static_cast<std::uint64_t>(e.from) << 32) | e.to, e.cost);
    }
  }

  std::optional<double> cost(NodeId u, NodeId v) const {
    auto it = cost_.find((static_cast<std::uint64_t>(u) << 32) | v);
    if (it == cost_.end()) return std::nullopt;
    return it->second;
  }

  NodeId node_count() const { return node_count_; }

 private:
  NodeId node_count_;
  std::unordered_map<std::uint64_t, double> cost_;
};

}  // namespace pathweave
