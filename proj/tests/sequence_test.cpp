#include "pathweave/sequence.hpp"

#include <map>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace pathweave {
namespace {

TEST(SequenceTask, ValidatesTargets) {
  SequenceTask task;
  task.target = "ABCDEF";
  EXPECT_NO_THROW(validate(task));
  task.target = "ACDF";
  EXPECT_NO_THROW(validate(task));
  task.target = "AF";
  EXPECT_NO_THROW(validate(task));
  task.target = "AXF";
  EXPECT_THROW(validate(task), std::invalid_argument);
  task.target = "BCDEF";
  EXPECT_THROW(validate(task), std::invalid_argument);
  task.target = "ABCDE";
  EXPECT_THROW(validate(task), std::invalid_argument);
  task.target = "ADBF";  // not increasing
  EXPECT_THROW(validate(task), std::invalid_argument);
}

TEST(SeqPlan, MatchesExhaustiveMaxProductSearch) {
  SequenceTask task;
  LetterNetwork net;
  net.alphabet = task.alphabet;
  net.weights.assign(36, 0.1);
  for (std::size_t i = 0; i < 6; ++i) net.weight(i, i) = 0.0;
  net.weight(0, 1) = 0.4;  // A -> B
  net.weight(1, 5) = 0.3;  // B -> F
  const auto plan = seq_plan(net);
  ASSERT_TRUE(plan.has_value());
  EXPECT_EQ(*plan, "ABF");

  // Exhaustive oracle over all simple A..F paths.
  std::vector<std::vector<std::pair<NodeId, double>>> adjacency(6);
  for (NodeId from = 0; from < 6; ++from) {
    for (NodeId to = 0; to < 6; ++to) {
      if (from != to) adjacency[from].emplace_back(to, net.weight(from, to));
    }
  }
  const auto [best, best_path] = testing::max_product_path(adjacency, 0, 5);
  EXPECT_DOUBLE_EQ(best, 0.4 * 0.3);
  std::string oracle_plan;
  for (NodeId id : best_path) oracle_plan.push_back(net.alphabet[id]);
  EXPECT_EQ(*plan, oracle_plan);
}

TEST(SeqPlan, TwoLetterAlphabetIsAlwaysDirect) {
  SequenceTask task;
  task.alphabet = "AF";
  task.target = "AF";
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    task.seed = seed;
    const LetterNetwork net = init_letter_network(task);
    const auto plan = seq_plan(net);
    ASSERT_TRUE(plan.has_value());
    EXPECT_EQ(*plan, "AF");
  }
}

TEST(SeqPlan, DoesNotMutateWeights) {
  SequenceTask task;
  task.seed = 9;
  const LetterNetwork net = init_letter_network(task);
  const auto before = net.weights;
  (void)seq_plan(net);
  EXPECT_EQ(before, net.weights);
}

TEST(SeqLearning, DegenerateTargetConvergesAfterKillingDetours) {
  // Every planned detour A -> X -> ... -> F gets its (A, X) pair zeroed in
  // one epoch, and there are only four such pairs, so four update rounds
  // bound the worst case; most seeds need at most two.
  SequenceTask task;
  task.target = "AF";
  int worst = 0;
  int fast = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    task.seed = seed;
    const SeqRunLog log = seq_learning_run(task);
    ASSERT_TRUE(log.converged);
    worst = std::max(worst, static_cast<int>(log.epochs_to_converge));
    if (log.epochs_to_converge <= 2) ++fast;
  }
  EXPECT_LE(worst, 4);
  EXPECT_GE(fast, 35);
}

TEST(SeqLearning, RewardSignsFollowTargetAdjacency) {
  SequenceTask task;
  task.target = "ABCDEF";
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    task.seed = seed;
    LetterNetwork net = init_letter_network(task);
    LearningConfig config;
    config.alpha = task.alpha;
    for (int epoch = 0; epoch < 30; ++epoch) {
      const auto plan = seq_plan(net);
      ASSERT_TRUE(plan.has_value());
      if (*plan == task.target) break;
      const auto before = net.weights;
      std::vector<std::pair<std::size_t, std::size_t>> touched;
      for (std::size_t i = 0; i + 1 < plan->size(); ++i) {
        const auto pre = net.alphabet.find((*plan)[i]);
        const auto post = net.alphabet.find((*plan)[i + 1]);
        const double reward =
            pair_in_target(task.target, (*plan)[i], (*plan)[i + 1]) ? 1.0
                                                                    : -1.0;
        net.weight(pre, post) =
            hebbian_update(net.weight(pre, post), 1.0, 1.0, reward, config);
        touched.emplace_back(pre, post);
      }
      // Sign correctness: target-adjacent pairs never lose weight, others
      // never gain; untouched weights stay bit-identical (locality).
      for (std::size_t from = 0; from < 6; ++from) {
        for (std::size_t to = 0; to < 6; ++to) {
          const double now = net.weight(from, to);
          const double was = before[from * 6 + to];
          const bool touched_pair =
              std::find(touched.begin(), touched.end(),
                        std::make_pair(from, to)) != touched.end();
          if (!touched_pair) {
            ASSERT_EQ(now, was);
          } else if (pair_in_target(task.target, net.alphabet[from],
                                    net.alphabet[to])) {
            ASSERT_GE(now, was);
          } else {
            ASSERT_LE(now, was);
          }
        }
      }
    }
  }
}

TEST(SeqLearning, FullSequenceConvergesQuickly) {
  SequenceTask task;
  task.target = "ABCDEF";
  int converged = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    task.seed = seed;
    const SeqRunLog log = seq_learning_run(task);
    if (log.converged && log.epochs_to_converge <= 50) ++converged;
  }
  EXPECT_GE(converged, 28);
}

TEST(SeqLearning, ShorterTargetNeedsFewerEpochsOnAverage) {
  SequenceTask full;
  full.target = "ABCDEF";
  SequenceTask partial;
  partial.target = "ACDF";
  double epochs_full = 0.0;
  double epochs_partial = 0.0;
  const int seeds = 40;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    full.seed = seed;
    partial.seed = seed;
    epochs_full += seq_learning_run(full).epochs_to_converge;
    epochs_partial += seq_learning_run(partial).epochs_to_converge;
  }
  EXPECT_LT(epochs_partial / seeds, epochs_full / seeds);
}

TEST(SeqLearning, EpochLogStartsAtZeroAndEndsWithTarget) {
  SequenceTask task;
  task.target = "ABCDEF";
  task.seed = 123;
  const SeqRunLog log = seq_learning_run(task);
  ASSERT_FALSE(log.epochs.empty());
  EXPECT_EQ(log.epochs.front().epoch, 0u);
  if (log.converged) {
    EXPECT_EQ(log.epochs.back().planned, task.target);
    EXPECT_EQ(log.epochs.back().epoch, log.epochs_to_converge);
  }
}

}  // namespace
}  // namespace pathweave
