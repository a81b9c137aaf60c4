// Batch command-line surface for graph generation, the three solvers, the
// equivalence experiments, and the two learning scenarios. Data goes to
// stdout or the named output files; diagnostics go to stderr. Exit codes:
// 0 ok, 2 usage or config error, 3 negative cycle.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathweave/bellman_ford.hpp"
#include "pathweave/equivalence.hpp"
#include "pathweave/graph.hpp"
#include "pathweave/graph_io.hpp"
#include "pathweave/manifest.hpp"
#include "pathweave/navigation.hpp"
#include "pathweave/nnbf.hpp"
#include "pathweave/presets.hpp"
#include "pathweave/sequence.hpp"
#include "pathweave/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegativeCycle = 3;

struct NegativeCycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PATHWEAVE_SEED pins runs in CI regardless of --seed flags.
std::uint64_t resolve_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("PATHWEAVE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return flag_seed;
}

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

pathweave::RunManifest begin_manifest(const std::string& command,
                                      nlohmann::json config,
                                      std::uint64_t seed) {
  pathweave::RunManifest manifest;
  manifest.command = command;
  manifest.config = std::move(config);
  manifest.seed = seed;
  manifest.started_at = pathweave::RunManifest::timestamp();
  return manifest;
}

void finish_manifest(pathweave::RunManifest manifest,
                     const std::vector<std::string>& outputs,
                     const std::string& manifest_path) {
  for (const std::string& file : outputs) manifest.add_output(file);
  manifest.finished_at = pathweave::RunManifest::timestamp();
  manifest.write(manifest_path);
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  pathweave::GeneratorConfig config;
  std::string out;
  std::string manifest_path;
};

int run_generate(GenerateOptions opts) {
  opts.config.seed = resolve_seed(opts.config.seed);
  const pathweave::Graph graph = pathweave::generate_random_graph(opts.config);
  pathweave::write_graph_file(opts.out, graph);
  nlohmann::json config;
  config["nodes"] = opts.config.node_count;
  config["edge_prob"] = opts.config.edge_prob;
  config["pos_cost_range"] = {opts.config.pos_cost_range.lo,
                              opts.config.pos_cost_range.hi};
  config["neg_cost_range"] = {opts.config.neg_cost_range.lo,
                              opts.config.neg_cost_range.hi};
  config["neg_prob"] = opts.config.neg_prob;
  config["out"] = opts.out;
  auto manifest = begin_manifest("generate", config, opts.config.seed);
  const std::string manifest_path =
      opts.manifest_path.empty() ? opts.out + ".manifest.json"
                                 : opts.manifest_path;
  finish_manifest(std::move(manifest), {opts.out}, manifest_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string graph_file;
  std::string algo = "bf1";
  pathweave::NodeId source = 0;
  double k = 1e6;
  std::optional<pathweave::NodeId> target;
  bool full_sweeps = false;
  std::string manifest_path;
};

int run_solve(const SolveOptions& opts) {
  const pathweave::Graph graph = pathweave::read_graph_file(opts.graph_file);
  if (opts.source >= graph.node_count()) {
    throw std::invalid_argument("solve: source out of range");
  }
  if (opts.target && *opts.target >= graph.node_count()) {
    throw std::invalid_argument("solve: target out of range");
  }
  const bool early_stop = !opts.full_sweeps;

  // All algorithms share the negative-cycle gate; NN-BF has no meaningful
  // fixed point on such inputs either.
  {
    pathweave::ShortestPathResult probe = pathweave::bf_v1(graph, opts.source, false);
    if (pathweave::detect_negative_cycle(graph, probe)) {
      std::cerr << "negative cycle reachable from source " << opts.source
                << "; distances are unbounded below\n";
      return kExitNegativeCycle;
    }
  }

  nlohmann::json out;
  std::optional<std::vector<pathweave::NodeId>> path;
  if (opts.algo == "nnbf") {
    const pathweave::Network network = pathweave::graph_to_network(graph, opts.k);
    const pathweave::ActivationResult result =
        pathweave::nnbf_solve(network, opts.source, early_stop);
    out = pathweave::to_json(result);
    if (opts.target) {
      path = pathweave::reconstruct_path_from_max_inputs(result, *opts.target);
    }
  } else {
    const pathweave::ShortestPathResult result =
        opts.algo == "bf1" ? pathweave::bf_v1(graph, opts.source, early_stop)
                           : pathweave::bf_v2(graph, opts.source, early_stop);
    out = pathweave::to_json(result);
    if (opts.target) {
      path = pathweave::reconstruct_path(result, *opts.target);
    }
  }
  if (opts.target) {
    if (path) {
      out["path"] = *path;
      out["path_cost"] = pathweave::path_cost(graph, *path);
    } else {
      out["path"] = nullptr;
      out["path_cost"] = nullptr;
    }
  }
  std::cout << out.dump() << '\n';

  if (!opts.manifest_path.empty()) {
    nlohmann::json config;
    config["graph"] = opts.graph_file;
    config["algo"] = opts.algo;
    config["source"] = opts.source;
    config["k"] = opts.k;
    auto manifest = begin_manifest("solve", config, 0);
    finish_manifest(std::move(manifest), {}, opts.manifest_path);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// experiment commands (pairs, k0scan, converge, bench)

struct ExperimentOptions {
  std::string preset;
  std::string config_file;
  std::string out_dir = ".";
  unsigned workers = default_workers();
  std::uint64_t seed = 0;
};

std::vector<pathweave::GraphFamily> families_from_json(
    const nlohmann::json& j, std::uint64_t seed) {
  std::vector<pathweave::GraphFamily> families;
  std::uint64_t stride = 0;
  for (const auto& f : j.at("families")) {
    pathweave::GraphFamily family;
    family.config.node_count = f.at("nodes").get<pathweave::NodeId>();
    family.config.edge_prob = f.at("density").get<double>();
    family.config.pos_cost_range = {f.value("cost_lo", 1.0),
                                    f.value("cost_hi", 10.0)};
    family.config.seed = seed + (stride++) * 1000000;
    family.graph_count = f.value("count", 100);
    families.push_back(family);
  }
  return families;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::string out_path(const ExperimentOptions& opts, const std::string& name) {
  std::filesystem::create_directories(opts.out_dir);
  return (std::filesystem::path(opts.out_dir) / name).string();
}

int run_pairs(ExperimentOptions opts) {
  opts.seed = resolve_seed(opts.seed);
  pathweave::PairExperimentConfig config;
  if (!opts.config_file.empty()) {
    const auto j = load_json_file(opts.config_file);
    config.length_set = j.at("lengths").get<std::vector<std::size_t>>();
    config.trials_per_combination = j.value("trials", 60);
    config.cost_mean_range = {j.value("mean_lo", 1.0), j.value("mean_hi", 21.0)};
    config.cost_sigma_range = {j.value("sigma_lo", 0.0), j.value("sigma_hi", 5.0)};
    config.seed = opts.seed;
  } else if (opts.preset == "fig3-full") {
    config = pathweave::presets::pairs_full(opts.seed);
  } else if (opts.preset == "fig3-desk") {
    config = pathweave::presets::pairs_desk(opts.seed);
  } else {
    throw std::invalid_argument("pairs: need --preset fig3-full|fig3-desk or --config");
  }
  const auto records = pathweave::pair_experiment(config, opts.workers);
  const std::string csv = out_path(opts, "k0_pairs.csv");
  pathweave::write_pair_records_csv(csv, records);

  nlohmann::json echo;
  echo["lengths"] = config.length_set;
  echo["trials"] = config.trials_per_combination;
  echo["records"] = records.size();
  echo["workers"] = opts.workers;
  auto manifest = begin_manifest("pairs", echo, opts.seed);
  finish_manifest(std::move(manifest), {csv},
                  out_path(opts, "pairs.manifest.json"));
  std::cerr << "pairs: " << records.size() << " records -> " << csv << '\n';
  return kExitOk;
}

int run_k0scan(ExperimentOptions opts) {
  opts.seed = resolve_seed(opts.seed);
  std::vector<pathweave::GraphFamily> families;
  if (!opts.config_file.empty()) {
    families = families_from_json(load_json_file(opts.config_file), opts.seed);
  } else if (opts.preset == "fig4-full") {
    families = pathweave::presets::k0_scan_full(opts.seed);
  } else if (opts.preset == "fig4-desk") {
    families = pathweave::presets::k0_scan_desk(opts.seed);
  } else {
    throw std::invalid_argument("k0scan: need --preset fig4-full|fig4-desk or --config");
  }
  const auto stats = pathweave::graph_k0_scan(
      families, pathweave::presets::k0_ladder(), opts.workers);
  const std::string csv = out_path(opts, "k0_graphs.csv");
  pathweave::write_graph_k0_csv(csv, stats);

  nlohmann::json echo;
  echo["families"] = families.size();
  echo["workers"] = opts.workers;
  auto manifest = begin_manifest("k0scan", echo, opts.seed);
  finish_manifest(std::move(manifest), {csv},
                  out_path(opts, "k0scan.manifest.json"));
  std::cerr << "k0scan: " << stats.size() << " families -> " << csv << '\n';
  return kExitOk;
}

int run_converge(ExperimentOptions opts) {
  opts.seed = resolve_seed(opts.seed);
  std::vector<pathweave::GraphFamily> families;
  if (!opts.config_file.empty()) {
    families = families_from_json(load_json_file(opts.config_file), opts.seed);
  } else if (opts.preset == "fig5-full") {
    families = pathweave::presets::convergence_full(opts.seed);
  } else if (opts.preset == "fig5-desk") {
    families = pathweave::presets::convergence_desk(opts.seed);
  } else {
    throw std::invalid_argument("converge: need --preset fig5-full|fig5-desk or --config");
  }
  const auto stats = pathweave::convergence_experiment(families, opts.workers);
  const std::string csv = out_path(opts, "convergence.csv");
  const std::string hist = out_path(opts, "convergence_hist.csv");
  pathweave::write_convergence_csv(csv, stats);
  pathweave::write_convergence_histogram_csv(hist, stats);

  nlohmann::json echo;
  echo["families"] = families.size();
  echo["workers"] = opts.workers;
  auto manifest = begin_manifest("converge", echo, opts.seed);
  finish_manifest(std::move(manifest), {csv, hist},
                  out_path(opts, "converge.manifest.json"));
  std::cerr << "converge: " << stats.size() << " families -> " << csv << '\n';
  return kExitOk;
}

int run_bench(ExperimentOptions opts) {
  opts.seed = resolve_seed(opts.seed);
  std::vector<pathweave::GraphFamily> families;
  if (!opts.config_file.empty()) {
    families = families_from_json(load_json_file(opts.config_file), opts.seed);
  } else if (opts.preset == "bench-full") {
    families = pathweave::presets::bench_full(opts.seed);
  } else if (opts.preset == "bench-desk") {
    families = pathweave::presets::bench_desk(opts.seed);
  } else {
    throw std::invalid_argument("bench: need --preset bench-full|bench-desk or --config");
  }
  // Timing stays on one worker; --workers changes nothing here.
  const auto stats = pathweave::runtime_benchmark(families);
  const std::string csv = out_path(opts, "runtime.csv");
  pathweave::write_runtime_csv(csv, stats);

  nlohmann::json echo;
  echo["families"] = families.size();
  auto manifest = begin_manifest("bench", echo, opts.seed);
  finish_manifest(std::move(manifest), {csv},
                  out_path(opts, "bench.manifest.json"));
  std::cerr << "bench: " << stats.size() << " families -> " << csv << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// learn

struct LearnNavOptions {
  std::string scenario = "static";
  unsigned iterations = 2000;
  std::optional<unsigned> remove_at;
  std::uint64_t seed = 0;
  unsigned plan_interval = 100;
  bool full_weights = false;
  std::string out = "nav_log.jsonl";
};

int run_learn_nav(LearnNavOptions opts) {
  opts.seed = resolve_seed(opts.seed);
  const auto scenario = opts.scenario == "dynamic"
                            ? pathweave::NavScenario::kDynamic
                            : pathweave::NavScenario::kStatic;
  const pathweave::NavEnvironment env =
      pathweave::build_nav_environment(scenario, opts.seed);
  pathweave::LearningConfig config;
  config.plan_interval = opts.plan_interval;
  const pathweave::NavRunLog log = pathweave::nav_learning_run(
      env, config, opts.iterations, opts.remove_at, opts.seed + 1);

  std::ofstream out(opts.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + opts.out);
  for (const pathweave::NavSnapshot& snap : log.snapshots) {
    nlohmann::json line;
    line["iteration"] = snap.iteration;
    if (snap.planned_path) {
      line["planned_path"] = *snap.planned_path;
      line["path_euclidean_length"] = snap.path_length;
    } else {
      line["planned_path"] = nullptr;
      line["path_euclidean_length"] = nullptr;
    }
    line["weights_digest"] = pathweave::hex64(snap.weights_digest);
    if (opts.full_weights) line["weights"] = log.weights;
    out << line.dump() << '\n';
  }
  out.close();

  // Environment spec for reproducible arenas.
  nlohmann::json env_json;
  env_json["grid_m"] = env.layout.grid_m;
  env_json["spacing"] = env.layout.spacing;
  env_json["noise"] = {env.layout.noise_lo, env.layout.noise_hi};
  env_json["theta_d"] = env.layout.theta_d;
  env_json["seed"] = env.seed;
  auto locations = nlohmann::json::array();
  for (const auto& p : env.locations) locations.push_back({p.x, p.y});
  env_json["locations"] = std::move(locations);
  auto obstacles = nlohmann::json::array();
  for (const auto& r : env.layout.obstacles) {
    obstacles.push_back({r.x0, r.y0, r.x1, r.y1});
  }
  env_json["obstacles"] = std::move(obstacles);
  const std::string env_path = opts.out + ".env.json";
  {
    std::ofstream env_out(env_path, std::ios::binary);
    env_out << env_json.dump(2) << '\n';
  }

  nlohmann::json echo;
  echo["scenario"] = opts.scenario;
  echo["iterations"] = opts.iterations;
  if (opts.remove_at) echo["remove_at"] = *opts.remove_at;
  echo["plan_interval"] = opts.plan_interval;
  auto manifest = begin_manifest("learn nav", echo, opts.seed);
  finish_manifest(std::move(manifest), {opts.out, env_path},
                  opts.out + ".manifest.json");
  std::cerr << "learn nav: " << log.snapshots.size() << " snapshots -> "
            << opts.out << '\n';
  return kExitOk;
}

struct LearnSeqOptions {
  std::string target = "ABCDEF";
  unsigned seeds = 1;
  std::uint64_t seed = 0;
  std::string out = "seq_log.jsonl";
};

int run_learn_seq(LearnSeqOptions opts) {
  opts.seed = resolve_seed(opts.seed);
  pathweave::SequenceTask task;
  task.target = opts.target;
  pathweave::validate(task);  // malformed targets exit 2 via the catch below

  std::ofstream out(opts.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + opts.out);
  unsigned converged = 0;
  double epoch_sum = 0.0;
  for (unsigned s = 0; s < opts.seeds; ++s) {
    task.seed = opts.seed + s;
    const pathweave::SeqRunLog log = pathweave::seq_learning_run(task);
    for (const pathweave::SeqEpoch& e : log.epochs) {
      nlohmann::json line;
      line["seed"] = task.seed;
      line["epoch"] = e.epoch;
      line["planned_path"] = e.planned;
      out << line.dump() << '\n';
    }
    if (log.converged) {
      ++converged;
      epoch_sum += log.epochs_to_converge;
    }
  }
  out.close();

  nlohmann::json summary;
  summary["target"] = opts.target;
  summary["seeds"] = opts.seeds;
  summary["converged_fraction"] =
      opts.seeds ? static_cast<double>(converged) / opts.seeds : 0.0;
  if (converged > 0) {
    summary["mean_epochs"] = epoch_sum / converged;
  } else {
    summary["mean_epochs"] = nullptr;
  }
  std::cout << summary.dump() << '\n';

  nlohmann::json echo;
  echo["target"] = opts.target;
  echo["seeds"] = opts.seeds;
  auto manifest = begin_manifest("learn seq", echo, opts.seed);
  finish_manifest(std::move(manifest), {opts.out}, opts.out + ".manifest.json");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bellman-Ford, its neural reformulation, and learning on top"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "write a random graph file");
  generate->add_option("--nodes", gen.config.node_count, "node count")->required();
  generate->add_option("--edge-prob", gen.config.edge_prob, "edge probability");
  generate->add_option("--cost-min", gen.config.pos_cost_range.lo, "positive cost lower bound");
  generate->add_option("--cost-max", gen.config.pos_cost_range.hi, "positive cost upper bound");
  generate->add_option("--neg-prob", gen.config.neg_prob, "negative cost probability");
  generate->add_option("--neg-min", gen.config.neg_cost_range.lo, "negative cost lower bound");
  generate->add_option("--neg-max", gen.config.neg_cost_range.hi, "negative cost upper bound");
  generate->add_option("--seed", gen.config.seed, "generator seed");
  generate->add_option("--out", gen.out, "output file (.json for JSON, else edge-list text)")->required();
  generate->add_option("--manifest", gen.manifest_path, "manifest path override");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "run a solver on a graph file");
  solve_cmd->add_option("graph", solve.graph_file, "graph file")->required();
  solve_cmd->add_option("--algo", solve.algo, "bf1|bf2|nnbf")
      ->check(CLI::IsMember({"bf1", "bf2", "nnbf"}));
  solve_cmd->add_option("--source", solve.source, "source node");
  solve_cmd->add_option("--k", solve.k, "cost-to-weight scale for nnbf");
  unsigned target_value = 0;
  auto* target_opt = solve_cmd->add_option("--target", target_value, "also print the path to this node");
  solve_cmd->add_flag("--full-sweeps", solve.full_sweeps, "run all |V|-1 sweeps instead of stopping early");
  solve_cmd->add_option("--manifest", solve.manifest_path, "write a manifest here");

  ExperimentOptions pairs_opts, k0_opts, conv_opts, bench_opts;
  auto add_experiment_flags = [](CLI::App* cmd, ExperimentOptions& opts) {
    cmd->add_option("--preset", opts.preset, "named preset");
    cmd->add_option("--config", opts.config_file, "JSON config file");
    cmd->add_option("--out-dir", opts.out_dir, "output directory");
    cmd->add_option("--workers", opts.workers, "worker threads");
    cmd->add_option("--seed", opts.seed, "base seed");
  };
  auto* pairs_cmd = app.add_subcommand("pairs", "two-path K0 statistics (fig3-*)");
  add_experiment_flags(pairs_cmd, pairs_opts);
  auto* k0_cmd = app.add_subcommand("k0scan", "whole-graph K0 scan (fig4-*)");
  add_experiment_flags(k0_cmd, k0_opts);
  auto* conv_cmd = app.add_subcommand("converge", "iterations-to-convergence (fig5-*)");
  add_experiment_flags(conv_cmd, conv_opts);
  auto* bench_cmd = app.add_subcommand("bench", "per-sweep runtime benchmark");
  add_experiment_flags(bench_cmd, bench_opts);

  auto* learn = app.add_subcommand("learn", "plasticity experiments");
  learn->require_subcommand(1);
  LearnNavOptions nav;
  auto* nav_cmd = learn->add_subcommand("nav", "grid navigation learning");
  nav_cmd->add_option("--scenario", nav.scenario, "static|dynamic")
      ->check(CLI::IsMember({"static", "dynamic"}));
  nav_cmd->add_option("--iterations", nav.iterations, "exploration iterations");
  unsigned remove_at_value = 0;
  auto* remove_opt = nav_cmd->add_option("--remove-at", remove_at_value, "obstacle removal iteration");
  nav_cmd->add_option("--seed", nav.seed, "seed");
  nav_cmd->add_option("--plan-interval", nav.plan_interval, "iterations between snapshots");
  nav_cmd->add_flag("--full-weights", nav.full_weights, "embed the final weight matrix per snapshot");
  nav_cmd->add_option("--out", nav.out, "JSON-lines log path");

  LearnSeqOptions seq;
  auto* seq_cmd = learn->add_subcommand("seq", "event sequence learning");
  seq_cmd->add_option("--target", seq.target, "target sequence, e.g. ABCDEF");
  seq_cmd->add_option("--seeds", seq.seeds, "number of independent runs");
  seq_cmd->add_option("--seed", seq.seed, "base seed");
  seq_cmd->add_option("--out", seq.out, "JSON-lines log path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve_cmd) {
      if (*target_opt) solve.target = target_value;
      return run_solve(solve);
    }
    if (*pairs_cmd) return run_pairs(pairs_opts);
    if (*k0_cmd) return run_k0scan(k0_opts);
    if (*conv_cmd) return run_converge(conv_opts);
    if (*bench_cmd) return run_bench(bench_opts);
    if (*nav_cmd) {
      if (*remove_opt) nav.remove_at = remove_at_value;
      return run_learn_nav(nav);
    }
    if (*seq_cmd) return run_learn_seq(seq);
  } catch (const NegativeCycleError& e) {
    std::cerr << e.what() << '\n';
    return kExitNegativeCycle;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
