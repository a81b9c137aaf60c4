#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathweave/equivalence.hpp"

namespace pathweave::presets {

// Named experiment configurations. The *_full presets reproduce the
// published experiment scales; *_desk presets shrink node and trial counts
// roughly tenfold so the whole suite runs in CI.

inline PairExperimentConfig pairs_full(std::uint64_t seed) {
  PairExperimentConfig config;
  config.length_set = {2, 3, 4, 5, 6, 7, 8, 10, 20, 30, 40, 50, 100, 200};
  config.trials_per_combination = 60;
  config.seed = seed;
  return config;
}

inline PairExperimentConfig pairs_desk(std::uint64_t seed) {
  PairExperimentConfig config;
  config.length_set = {2, 5, 10, 20, 50};
  config.trials_per_combination = 20;
  config.seed = seed;
  return config;
}

inline std::vector<double> k0_ladder() {
  return {1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
}

namespace detail {

inline GraphFamily family(NodeId nodes, double density, double cost_lo,
                          double cost_hi, std::size_t count,
                          std::uint64_t seed) {
  GraphFamily f;
  f.config.node_count = nodes;
  f.config.edge_prob = density;
  f.config.pos_cost_range = {cost_lo, cost_hi};
  f.config.neg_prob = 0.0;
  f.config.seed = seed;
  f.graph_count = count;
  return f;
}

}  // namespace detail

inline std::vector<GraphFamily> k0_scan_full(std::uint64_t seed) {
  std::vector<GraphFamily> families;
  std::uint64_t stride = 0;
  for (NodeId nodes : {500u, 1000u, 2000u}) {
    for (double density : {0.05, 0.1, 0.5, 1.0}) {
      for (double cost_hi : {10.0, 100.0, 1000.0}) {
        // The hard sparse large-cost cells get a deeper sample.
        const bool deep = cost_hi == 1000.0 &&
                          ((nodes == 500 && density <= 0.1) ||
                           (nodes == 1000 && density == 0.05));
        families.push_back(detail::family(nodes, density, 1.0, cost_hi,
                                          deep ? 10000 : 1000,
                                          seed + (stride++) * 1000000));
      }
    }
  }
  return families;
}

inline std::vector<GraphFamily> k0_scan_desk(std::uint64_t seed) {
  std::vector<GraphFamily> families;
  std::uint64_t stride = 0;
  for (NodeId nodes : {100u, 500u}) {
    for (double density : {0.05, 1.0}) {
      for (double cost_hi : {10.0, 1000.0}) {
        families.push_back(detail::family(nodes, density, 1.0, cost_hi, 100,
                                          seed + (stride++) * 1000000));
      }
    }
  }
  return families;
}

inline std::vector<GraphFamily> convergence_full(std::uint64_t seed) {
  // Densities chosen to land near the published edge counts on 5,000 nodes.
  std::vector<GraphFamily> families;
  std::uint64_t stride = 0;
  const double pairs = 5000.0 * 4999.0;
  for (double edges : {12.5e3, 25e3, 250e3, 2.5e6, 12.5e6, 24.995e6}) {
    families.push_back(
        detail::family(5000, edges / pairs, 1.0, 10.0, 500,
                       seed + (stride++) * 1000000));
  }
  return families;
}

inline std::vector<GraphFamily> convergence_desk(std::uint64_t seed) {
  std::vector<GraphFamily> families;
  std::uint64_t stride = 0;
  for (double density : {0.0005, 0.1, 0.5, 1.0}) {
    families.push_back(detail::family(1000, density, 1.0, 10.0, 100,
                                      seed + (stride++) * 1000000));
  }
  return families;
}

inline std::vector<GraphFamily> bench_full(std::uint64_t seed) {
  std::vector<GraphFamily> families;
  std::uint64_t stride = 0;
  for (double density : {0.0005, 0.005, 0.05, 0.1, 0.5, 1.0}) {
    families.push_back(detail::family(5000, density, 1.0, 10.0, 3,
                                      seed + (stride++) * 1000000));
  }
  return families;
}

inline std::vector<GraphFamily> bench_desk(std::uint64_t seed) {
  std::vector<GraphFamily> families;
  std::uint64_t stride = 0;
  for (double density : {0.05, 0.1, 0.5, 1.0}) {
    families.push_back(detail::family(2000, density, 1.0, 10.0, 3,
                                      seed + (stride++) * 1000000));
  }
  return families;
}

}  // namespace pathweave::presets
