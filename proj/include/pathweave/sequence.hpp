#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathweave/graph.hpp"
#include "pathweave/nnbf.hpp"
#include "pathweave/plasticity.hpp"
#include "pathweave/rng.hpp"

namespace pathweave {

// Learn to reproduce a fixed subsequence of events (letters) on a fully
// connected network without self-connections. Planning always runs from the
// first to the last alphabet letter.
struct SequenceTask {
  std::string alphabet = "ABCDEF";
  std::string target = "ABCDEF";
  double init_weight_lo = 0.0;
  double init_weight_hi = 0.5;
  double alpha = 0.9;
  unsigned epoch_cap = 200;
  std::uint64_t seed = 0;
};

inline void validate(const SequenceTask& task) {
  if (task.alphabet.size() < 2) {
    throw std::invalid_argument("sequence: alphabet needs at least two events");
  }
  if (task.target.size() < 2 || task.target.front() != task.alphabet.front() ||
      task.target.back() != task.alphabet.back()) {
    throw std::invalid_argument(
        "sequence: target must run from the first to the last alphabet event");
  }
  std::size_t previous = 0;
  for (std::size_t i = 0; i < task.target.size(); ++i) {
    const auto pos = task.alphabet.find(task.target[i]);
    if (pos == std::string::npos) {
      throw std::invalid_argument("sequence: target event outside alphabet");
    }
    if (i > 0 && pos <= previous) {
      throw std::invalid_argument(
          "sequence: target events must be strictly increasing");
    }
    previous = pos;
  }
}

// Event network state: dense weight matrix over the alphabet, no
// self-connections.
struct LetterNetwork {
  std::string alphabet;
  std::vector<double> weights;  // row-major from x to

  double weight(std::size_t from, std::size_t to) const {
    return weights[from * alphabet.size() + to];
  }
  double& weight(std::size_t from, std::size_t to) {
    return weights[from * alphabet.size() + to];
  }
};

inline LetterNetwork init_letter_network(const SequenceTask& task) {
  validate(task);
  LetterNetwork net;
  net.alphabet = task.alphabet;
  const std::size_t n = task.alphabet.size();
  net.weights.assign(n * n, 0.0);
  rng::Stream stream(task.seed);
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (from == to) continue;
      net.weight(from, to) =
          stream.uniform(task.init_weight_lo, task.init_weight_hi);
    }
  }
  return net;
}

// NN-BF plan from the first to the last letter, mapped back to letters.
// nullopt only if the end neuron never receives activity, which a complete
// graph with positive initial weights rules out.
inline std::optional<std::string> seq_plan(const LetterNetwork& net) {
  const auto n = static_cast<NodeId>(net.alphabet.size());
  std::vector<std::vector<Connection>> incoming(n);
  for (NodeId to = 0; to < n; ++to) {
    for (NodeId from = 0; from < n; ++from) {
      if (from == to) continue;
      incoming[to].push_back({from, net.weight(from, to), 0.0});
    }
  }
  const ActivationResult act =
      nnbf_solve(Network(n, std::move(incoming)), 0, true);
  const auto path = reconstruct_path_from_max_inputs(act, n - 1);
  if (!path) return std::nullopt;
  std::string sequence;
  sequence.reserve(path->size());
  for (NodeId id : *path) sequence.push_back(net.alphabet[id]);
  return sequence;
}

struct SeqEpoch {
  unsigned epoch = 0;
  std::string planned;
};

struct SeqRunLog {
  std::vector<SeqEpoch> epochs;
  bool converged = false;
  unsigned epochs_to_converge = 0;  // update rounds before the correct plan
  LetterNetwork final_network;
};

inline bool pair_in_target(const std::string& target, char pre, char post) {
  for (std::size_t i = 0; i + 1 < target.size(); ++i) {
    if (target[i] == pre && target[i + 1] == post) return true;
  }
  return false;
}

// Plan, then reinforce every planned adjacent pair: R = +1 for pairs that
// are adjacent in the target, -1 otherwise (outputs clamped to 1 by the
// event inputs). Repeats until the plan equals the target or the epoch cap
// is reached.
inline SeqRunLog seq_learning_run(const SequenceTask& task) {
  validate(task);
  LearningConfig config;
  config.alpha = task.alpha;
  LetterNetwork net = init_letter_network(task);

  SeqRunLog log;
  for (unsigned epoch = 0;; ++epoch) {
    const auto plan = seq_plan(net);
    if (!plan) {
      throw std::runtime_error("sequence: plan has no active end neuron");
    }
    log.epochs.push_back({epoch, *plan});
    if (*plan == task.target) {
      log.converged = true;
      log.epochs_to_converge = epoch;
      break;
    }
    if (epoch == task.epoch_cap) break;
    for (std::size_t i = 0; i + 1 < plan->size(); ++i) {
      const auto pre = net.alphabet.find((*plan)[i]);
      const auto post = net.alphabet.find((*plan)[i + 1]);
      const double reward =
          pair_in_target(task.target, (*plan)[i], (*plan)[i + 1]) ? 1.0 : -1.0;
      net.weight(pre, post) =
          hebbian_update(net.weight(pre, post), 1.0, 1.0, reward, config);
    }
  }
  log.final_network = std::move(net);
  return log;
}

}  // namespace pathweave
