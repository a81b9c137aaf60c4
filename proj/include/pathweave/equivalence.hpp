#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathweave/bellman_ford.hpp"
#include "pathweave/csv.hpp"
#include "pathweave/graph.hpp"
#include "pathweave/nnbf.hpp"
#include "pathweave/parallel.hpp"
#include "pathweave/rng.hpp"

namespace pathweave {

// Two competing edge-cost sequences between the same endpoints. Unequal
// lengths are fine; the product comparison pads the shorter side with
// zero-cost (weight 1) entries implicitly.
struct PathPair {
  std::vector<double> costs_a;
  std::vector<double> costs_b;
};

struct K0Record {
  std::size_t len_a = 0;
  std::size_t len_b = 0;
  double contrast = 0.0;
  double k0 = 0.0;
  std::uint64_t seed = 0;
};

// C = (sum A - sum B) / (sum A + sum B)
inline double contrast(const PathPair& pair) {
  const double sum_a =
      std::accumulate(pair.costs_a.begin(), pair.costs_a.end(), 0.0);
  const double sum_b =
      std::accumulate(pair.costs_b.begin(), pair.costs_b.end(), 0.0);
  if (sum_a + sum_b == 0.0) {
    throw std::invalid_argument("contrast: zero denominator");
  }
  return (sum_a - sum_b) / (sum_a + sum_b);
}

// True iff the cheaper-sum path also has the strictly larger weight product
// at this K. Equal sums have no strict ordering and report false.
inline bool products_ordered_correctly(const PathPair& pair, double k) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("products_ordered_correctly: K must be > 0");
  }
  const double sum_a =
      std::accumulate(pair.costs_a.begin(), pair.costs_a.end(), 0.0);
  const double sum_b =
      std::accumulate(pair.costs_b.begin(), pair.costs_b.end(), 0.0);
  if (sum_a == sum_b) return false;
  double prod_a = 1.0;
  for (double c : pair.costs_a) prod_a *= 1.0 - c / k;
  double prod_b = 1.0;
  for (double c : pair.costs_b) prod_b *= 1.0 - c / k;
  return sum_a < sum_b ? prod_a > prod_b : prod_b > prod_a;
}

namespace detail {

inline double k0_search_floor(const PathPair& pair) {
  double max_abs = 0.0;
  for (double c : pair.costs_a) max_abs = std::max(max_abs, std::fabs(c));
  for (double c : pair.costs_b) max_abs = std::max(max_abs, std::fabs(c));
  // Below the largest cost magnitude some weight is non-positive and the
  // product ordering is meaningless.
  return std::max(1.0, 1.01 * max_abs);
}

}  // namespace detail

// Smallest K (relative precision 1e-3) above which the product ordering
// matches the sum ordering and keeps matching on a doubling ladder up to
// k_max. Ordering in K is not assumed monotone: a rung counts only if every
// higher rung also passes. nullopt when the sums tie or no rung passes.
inline std::optional<K0Record> find_k0(const PathPair& pair, double k_max) {
  const double sum_a =
      std::accumulate(pair.costs_a.begin(), pair.costs_a.end(), 0.0);
  const double sum_b =
      std::accumulate(pair.costs_b.begin(), pair.costs_b.end(), 0.0);
  if (sum_a == sum_b) return std::nullopt;

  const double floor = detail::k0_search_floor(pair);
  if (floor > k_max) return std::nullopt;
  std::vector<double> rungs;
  for (double k = floor; k < k_max; k *= 2.0) rungs.push_back(k);
  rungs.push_back(k_max);

  std::vector<char> ok(rungs.size());
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    ok[i] = products_ordered_correctly(pair, rungs[i]);
  }
  std::size_t first_stable = rungs.size();
  for (std::size_t i = rungs.size(); i-- > 0;) {
    if (!ok[i]) break;
    first_stable = i;
  }
  if (first_stable == rungs.size()) return std::nullopt;

  double k0 = rungs[first_stable];
  if (first_stable > 0) {
    double lo = rungs[first_stable - 1];  // failing
    double hi = k0;                       // passing
    while (hi - lo > 1e-3 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (products_ordered_correctly(pair, mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    k0 = hi;
  }

  K0Record record;
  record.len_a = pair.costs_a.size();
  record.len_b = pair.costs_b.size();
  record.contrast = contrast(pair);
  record.k0 = k0;
  return record;
}

struct PairExperimentConfig {
  std::vector<std::size_t> length_set;
  std::size_t trials_per_combination = 60;
  CostRange cost_mean_range{1.0, 21.0};
  CostRange cost_sigma_range{0.0, 5.0};
  double k_max = 1e9;
  std::uint64_t seed = 0;
};

// All ordered (L_A, L_B) combinations, trials_per_combination instances
// each. Per instance, Gaussian mean and sigma are drawn separately for the
// two paths, then every edge cost from N(m, sigma^2). Tied sums (and pairs
// with no passing rung, equally degenerate) are dropped. Each instance owns
// stream seed + index, so any worker count yields the same record list.
inline std::vector<K0Record> pair_experiment(const PairExperimentConfig& config,
                                             unsigned workers = 1) {
  if (config.length_set.empty() || config.trials_per_combination == 0) {
    throw std::invalid_argument("pair_experiment: empty config");
  }
  const std::size_t combos = config.length_set.size() * config.length_set.size();
  const std::size_t total = combos * config.trials_per_combination;

  auto run_one = [&config](std::size_t idx) -> std::optional<K0Record> {
    const std::size_t combo = idx / config.trials_per_combination;
    const std::size_t len_a = config.length_set[combo / config.length_set.size()];
    const std::size_t len_b = config.length_set[combo % config.length_set.size()];
    const std::uint64_t item_seed = config.seed + idx;
    rng::Stream stream(item_seed);

    const double mean_a =
        stream.uniform(config.cost_mean_range.lo, config.cost_mean_range.hi);
    const double sigma_a =
        stream.uniform(config.cost_sigma_range.lo, config.cost_sigma_range.hi);
    const double mean_b =
        stream.uniform(config.cost_mean_range.lo, config.cost_mean_range.hi);
    const double sigma_b =
        stream.uniform(config.cost_sigma_range.lo, config.cost_sigma_range.hi);

    PathPair pair;
    pair.costs_a.reserve(len_a);
    for (std::size_t i = 0; i < len_a; ++i) {
      pair.costs_a.push_back(stream.gaussian(mean_a, sigma_a));
    }
    pair.costs_b.reserve(len_b);
    for (std::size_t i = 0; i < len_b; ++i) {
      pair.costs_b.push_back(stream.gaussian(mean_b, sigma_b));
    }

    auto record = find_k0(pair, config.k_max);
    if (record) record->seed = item_seed;
    return record;
  };

  auto raw = parallel_map<std::optional<K0Record>>(total, workers, run_one);
  std::vector<K0Record> records;
  records.reserve(total);
  for (const auto& r : raw) {
    if (r) records.push_back(*r);
  }
  return records;
}

inline void write_pair_records_csv(const std::string& path,
                                   const std::vector<K0Record>& records) {
  CsvWriter csv(path, {"len_a", "len_b", "contrast", "k0", "seed"});
  for (const K0Record& r : records) {
    csv.row({std::to_string(r.len_a), std::to_string(r.len_b),
             format_number(r.contrast), format_number(r.k0),
             std::to_string(r.seed)});
  }
}

// A generator config plus how many graphs to draw from it. Graph i uses
// stream seed config.seed + i.
struct GraphFamily {
  GeneratorConfig config;
  std::size_t graph_count = 100;
};

inline Graph family_graph(const GraphFamily& family, std::size_t index) {
  GeneratorConfig cfg = family.config;
  cfg.seed = family.config.seed + index;
  return generate_random_graph(cfg);
}

namespace detail {

// Every node's NN-BF path cost must reproduce the BF distance. Real-valued
// costs make bitwise equality too brittle when two routes tie to within
// rounding, so the audit allows 1e-9 relative slack; integer-cost suites
// assert exact equality separately.
inline bool nnbf_matches_bf(const Graph& graph, const EdgeCostIndex& index,
                            const ShortestPathResult& bf, double k) {
  const Network network = graph_to_network(graph, k);
  const ActivationResult act = nnbf_solve(network, bf.source, true);
  const NodeId n = graph.node_count();
  for (NodeId v = 0; v < n; ++v) {
    const bool bf_unreachable = bf.distances[v] == kInfDistance;
    const bool nn_unreachable =
        v != act.source && act.activations[v] == 0.0;
    if (bf_unreachable != nn_unreachable) return false;
    if (bf_unreachable) continue;
    std::optional<std::vector<NodeId>> path;
    try {
      path = reconstruct_path_from_max_inputs(act, v);
    } catch (const std::runtime_error&) {
      return false;  // cyclic max-input walk: not converged at this K
    }
    if (!path) return false;
    const double cost = path_cost(index, *path);
    const double tol = 1e-9 * std::max(1.0, std::fabs(bf.distances[v]));
    if (std::fabs(cost - bf.distances[v]) > tol) return false;
  }
  return true;
}

}  // namespace detail

struct FamilyK0Stats {
  GraphFamily family;
  std::vector<double> per_graph_k0;  // +inf where no ladder rung matched
  double max_k0 = 0.0;
};

// Graph-level K0: the smallest ladder rung at which NN-BF reproduces every
// BF distance and keeps doing so on all larger rungs.
inline std::vector<FamilyK0Stats> graph_k0_scan(
    const std::vector<GraphFamily>& families,
    const std::vector<double>& k_ladder, unsigned workers = 1) {
  if (k_ladder.empty()) {
    throw std::invalid_argument("graph_k0_scan: empty ladder");
  }
  std::vector<FamilyK0Stats> stats;
  stats.reserve(families.size());
  for (const GraphFamily& family : families) {
    if (family.config.neg_prob > 0.0) {
      throw std::invalid_argument("graph_k0_scan: positive costs only");
    }
    auto scan_one = [&](std::size_t idx) -> double {
      const Graph graph = family_graph(family, idx);
      const EdgeCostIndex index(graph);
      const ShortestPathResult bf = bf_v1(graph, 0, true);
      std::vector<char> ok(k_ladder.size());
      for (std::size_t r = 0; r < k_ladder.size(); ++r) {
        ok[r] = detail::nnbf_matches_bf(graph, index, bf, k_ladder[r]);
      }
      for (std::size_t r = 0; r < k_ladder.size(); ++r) {
        if (std::all_of(ok.begin() + r, ok.end(),
                        [](char c) { return c != 0; })) {
          return k_ladder[r];
        }
      }
      return std::numeric_limits<double>::infinity();
    };
    FamilyK0Stats fs;
    fs.family = family;
    fs.per_graph_k0 =
        parallel_map<double>(family.graph_count, workers, scan_one);
    fs.max_k0 =
        *std::max_element(fs.per_graph_k0.begin(), fs.per_graph_k0.end());
    stats.push_back(std::move(fs));
  }
  return stats;
}

inline void write_graph_k0_csv(const std::string& path,
                               const std::vector<FamilyK0Stats>& stats) {
  CsvWriter csv(path, {"nodes", "density", "cost_max", "max_k0"});
  for (const FamilyK0Stats& s : stats) {
    csv.row({std::to_string(s.family.config.node_count),
             format_number(s.family.config.edge_prob),
             format_number(s.family.config.pos_cost_range.hi),
             format_number(s.max_k0)});
  }
}

struct FamilyConvergenceStats {
  GraphFamily family;
  std::vector<std::size_t> edge_counts;
  std::vector<unsigned> iters_bf;
  std::vector<unsigned> iters_nnbf;
  unsigned max_iters_bf = 0;
  unsigned max_iters_nnbf = 0;
};

// Sweeps-to-stability for BF v1 and NN-BF with early stopping, per graph.
inline std::vector<FamilyConvergenceStats> convergence_experiment(
    const std::vector<GraphFamily>& families, unsigned workers = 1,
    double k = 1e6) {
  std::vector<FamilyConvergenceStats> stats;
  stats.reserve(families.size());
  for (const GraphFamily& family : families) {
    struct Item {
      std::size_t edges;
      unsigned iters_bf;
      unsigned iters_nnbf;
    };
    auto run_one = [&](std::size_t idx) -> Item {
      const Graph graph = family_graph(family, idx);
      const ShortestPathResult bf = bf_v1(graph, 0, true);
      const Network network = graph_to_network(graph, k);
      const ActivationResult act = nnbf_solve(network, 0, true);
      return {graph.edges().size(), bf.iterations_used, act.iterations_used};
    };
    auto items = parallel_map<Item>(family.graph_count, workers, run_one);
    FamilyConvergenceStats fs;
    fs.family = family;
    for (const Item& item : items) {
      fs.edge_counts.push_back(item.edges);
      fs.iters_bf.push_back(item.iters_bf);
      fs.iters_nnbf.push_back(item.iters_nnbf);
      fs.max_iters_bf = std::max(fs.max_iters_bf, item.iters_bf);
      fs.max_iters_nnbf = std::max(fs.max_iters_nnbf, item.iters_nnbf);
    }
    stats.push_back(std::move(fs));
  }
  return stats;
}

inline void write_convergence_csv(const std::string& path,
                                  const std::vector<FamilyConvergenceStats>& stats) {
  CsvWriter csv(path, {"nodes", "edges", "solver", "max_iters"});
  for (const FamilyConvergenceStats& s : stats) {
    const std::size_t mean_edges =
        s.edge_counts.empty()
            ? 0
            : std::accumulate(s.edge_counts.begin(), s.edge_counts.end(),
                              std::size_t{0}) /
                  s.edge_counts.size();
    csv.row({std::to_string(s.family.config.node_count),
             std::to_string(mean_edges), "bf_v1",
             std::to_string(s.max_iters_bf)});
    csv.row({std::to_string(s.family.config.node_count),
             std::to_string(mean_edges), "nnbf",
             std::to_string(s.max_iters_nnbf)});
  }
}

// Full iteration-count distribution, one row per observed count.
inline void write_convergence_histogram_csv(
    const std::string& path, const std::vector<FamilyConvergenceStats>& stats) {
  CsvWriter csv(path, {"nodes", "density", "solver", "iterations", "count"});
  auto emit = [&](const FamilyConvergenceStats& s, const char* solver,
                  const std::vector<unsigned>& iters) {
    std::vector<unsigned> sorted(iters);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      csv.row({std::to_string(s.family.config.node_count),
               format_number(s.family.config.edge_prob), solver,
               std::to_string(sorted[i]), std::to_string(j - i)});
      i = j;
    }
  };
  for (const FamilyConvergenceStats& s : stats) {
    emit(s, "bf_v1", s.iters_bf);
    emit(s, "nnbf", s.iters_nnbf);
  }
}

struct SolverTiming {
  std::string solver;
  double mean_seconds_per_sweep = 0.0;
  double stddev_seconds = 0.0;
};

struct FamilyRuntimeStats {
  GraphFamily family;
  std::size_t mean_edges = 0;
  std::vector<SolverTiming> timings;
};

// Wall time per sweep: one early-stopping warmup solve, then fixed-sweep
// solves divided by the sweep count. Timing is single-threaded on purpose.
inline std::vector<FamilyRuntimeStats> runtime_benchmark(
    const std::vector<GraphFamily>& families, unsigned timed_sweeps = 5,
    unsigned repetitions = 3, double k = 1e6) {
  using clock = std::chrono::steady_clock;
  std::vector<FamilyRuntimeStats> stats;
  stats.reserve(families.size());
  for (const GraphFamily& family : families) {
    std::vector<std::vector<double>> samples(3);  // bf1, bf2, nnbf
    std::size_t edge_total = 0;
    for (std::size_t g = 0; g < family.graph_count; ++g) {
      const Graph graph = family_graph(family, g);
      edge_total += graph.edges().size();
      const Network network = graph_to_network(graph, k);
      (void)bf_v1(graph, 0, true);
      (void)bf_v2(graph, 0, true);
      (void)nnbf_solve(network, 0, true);
      for (unsigned rep = 0; rep < repetitions; ++rep) {
        auto t0 = clock::now();
        (void)bf_v1(graph, 0, false, timed_sweeps);
        auto t1 = clock::now();
        (void)bf_v2(graph, 0, false, timed_sweeps);
        auto t2 = clock::now();
        (void)nnbf_solve(network, 0, false, timed_sweeps);
        auto t3 = clock::now();
        const double scale = 1.0 / timed_sweeps;
        samples[0].push_back(std::chrono::duration<double>(t1 - t0).count() * scale);
        samples[1].push_back(std::chrono::duration<double>(t2 - t1).count() * scale);
        samples[2].push_back(std::chrono::duration<double>(t3 - t2).count() * scale);
      }
    }
    FamilyRuntimeStats fs;
    fs.family = family;
    fs.mean_edges = family.graph_count ? edge_total / family.graph_count : 0;
    const char* names[3] = {"bf_v1", "bf_v2", "nnbf"};
    for (int s = 0; s < 3; ++s) {
      const auto& xs = samples[s];
      const double mean =
          std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
      double var = 0.0;
      for (double x : xs) var += (x - mean) * (x - mean);
      var /= xs.size();
      fs.timings.push_back({names[s], mean, std::sqrt(var)});
    }
    stats.push_back(std::move(fs));
  }
  return stats;
}

inline void write_runtime_csv(const std::string& path,
                              const std::vector<FamilyRuntimeStats>& stats) {
  CsvWriter csv(path, {"nodes", "density", "edges", "solver",
                       "mean_seconds_per_sweep", "stddev_seconds"});
  for (const FamilyRuntimeStats& s : stats) {
    for (const SolverTiming& t : s.timings) {
      csv.row({std::to_string(s.family.config.node_count),
               format_number(s.family.config.edge_prob),
               std::to_string(s.mean_edges), t.solver,
               format_number(t.mean_seconds_per_sweep),
               format_number(t.stddev_seconds)});
    }
  }
}

}  // namespace pathweave
