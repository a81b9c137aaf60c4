#include "pathweave/navigation.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace pathweave {
namespace {

NavLayout zero_noise_layout(double theta) {
  NavLayout layout;
  layout.noise_lo = 0.0;
  layout.noise_hi = 0.0;
  layout.theta_d = theta;
  return layout;
}

TEST(SegmentRect, BasicCases) {
  const Rect r{0.4, 0.4, 0.6, 0.6};
  EXPECT_TRUE(segment_intersects_rect({0.3, 0.5}, {0.7, 0.5}, r));   // crosses
  EXPECT_TRUE(segment_intersects_rect({0.5, 0.5}, {0.9, 0.9}, r));   // starts inside
  EXPECT_FALSE(segment_intersects_rect({0.3, 0.3}, {0.35, 0.9}, r)); // passes left
  EXPECT_FALSE(segment_intersects_rect({0.0, 0.0}, {1.0, 0.2}, r));  // below
  EXPECT_TRUE(segment_intersects_rect({0.3, 0.6}, {0.7, 0.6}, r));   // grazes edge
}

TEST(NavEnvironment, ZeroNoiseNarrowThresholdGivesFourNeighbourLinks) {
  const NavEnvironment env = make_nav_environment(zero_noise_layout(0.25), 0);
  ASSERT_EQ(env.location_count(), 25u);
  // Grid links are 0.2 apart, diagonals ~0.283: only axis neighbours pass.
  std::size_t directed = 0;
  for (NodeId k = 0; k < 25; ++k) directed += env.neighbors[k].size();
  EXPECT_EQ(directed, 2u * 40u);
  const unsigned m = 5;
  for (NodeId k = 0; k < 25; ++k) {
    const unsigned i = k % m;
    const unsigned j = k / m;
    const unsigned expected = (i > 0) + (i + 1 < m) + (j > 0) + (j + 1 < m);
    EXPECT_EQ(env.neighbors[k].size(), expected);
  }
}

TEST(NavEnvironment, WiderThresholdAddsDiagonals) {
  const NavEnvironment env = make_nav_environment(zero_noise_layout(0.35), 0);
  // Interior nodes gain the four diagonals (sqrt(0.08) <= 0.35).
  const NodeId center = 12;
  EXPECT_EQ(env.neighbors[center].size(), 8u);
}

TEST(NavEnvironment, ObstacleRemovesCoveredLink) {
  NavLayout layout = zero_noise_layout(0.25);
  // Covers the midpoint of the link between location 0 (0.2,0.2) and
  // location 1 (0.4,0.2).
  layout.obstacles.push_back({0.28, 0.17, 0.32, 0.23});
  const NavEnvironment env = make_nav_environment(layout, 0);
  const auto& n0 = env.neighbors[0];
  EXPECT_EQ(std::count(n0.begin(), n0.end(), 1u), 0);
  EXPECT_EQ(std::count(n0.begin(), n0.end(), 5u), 1);
}

TEST(NavEnvironment, WithoutObstaclesRestoresLinks) {
  NavLayout layout = zero_noise_layout(0.25);
  layout.obstacles.push_back({0.28, 0.17, 0.32, 0.23});
  const NavEnvironment env = make_nav_environment(layout, 0);
  const NavEnvironment cleared = env.without_obstacles();
  const auto& n0 = cleared.neighbors[0];
  EXPECT_EQ(std::count(n0.begin(), n0.end(), 1u), 1);
  EXPECT_EQ(env.locations[3].x, cleared.locations[3].x);  // layout kept
}

TEST(NavExploreStep, RewardFallsLinearlyWithDistance) {
  const NavEnvironment env = make_nav_environment(zero_noise_layout(0.25), 0);
  LearningConfig config;
  rng::Stream stream(1);
  for (int i = 0; i < 100; ++i) {
    const auto event = nav_explore_step(env, 0, config, stream);
    ASSERT_TRUE(event.has_value());
    EXPECT_DOUBLE_EQ(event->reward,
                     1.0 - env.distance(event->pre, event->post));
    EXPECT_DOUBLE_EQ(event->reward, 0.8);  // all links are 0.2 long
  }
}

TEST(NavExploreStep, CornerNeighboursChosenUniformly) {
  const NavEnvironment env = make_nav_environment(zero_noise_layout(0.25), 0);
  LearningConfig config;
  rng::Stream stream(2);
  int to_right = 0;
  int to_up = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const auto event = nav_explore_step(env, 0, config, stream);
    ASSERT_TRUE(event.has_value());
    if (event->post == 1) ++to_right;
    if (event->post == 5) ++to_up;
  }
  ASSERT_EQ(to_right + to_up, trials);
  // Chi-squared against the uniform split, 1 dof, p > 0.01 cutoff 6.635.
  const double expected = trials / 2.0;
  const double chi2 = (to_right - expected) * (to_right - expected) / expected +
                      (to_up - expected) * (to_up - expected) / expected;
  EXPECT_LT(chi2, 6.635);
}

TEST(NavExploreStep, IsolatedLocationSignalsRestart) {
  NavLayout layout = zero_noise_layout(0.25);
  // Box around location 0 cuts both of its links.
  layout.obstacles.push_back({0.25, 0.1, 0.35, 0.3});
  layout.obstacles.push_back({0.1, 0.25, 0.3, 0.35});
  const NavEnvironment env = make_nav_environment(layout, 0);
  ASSERT_TRUE(env.neighbors[0].empty());
  LearningConfig config;
  rng::Stream stream(3);
  EXPECT_FALSE(nav_explore_step(env, 0, config, stream).has_value());
}

TEST(NavLearningRun, ZeroIterationsPlansNothing) {
  const NavEnvironment env =
      build_nav_environment(NavScenario::kStatic, 0);
  LearningConfig config;
  const NavRunLog log = nav_learning_run(env, config, 0, {}, 1);
  ASSERT_EQ(log.snapshots.size(), 1u);
  EXPECT_EQ(log.snapshots[0].iteration, 0u);
  EXPECT_FALSE(log.snapshots[0].planned_path.has_value());
}

TEST(NavLearningRun, LearnsAPathInStaticArena) {
  const NavEnvironment env =
      build_nav_environment(NavScenario::kStatic, 3);
  LearningConfig config;
  const NavRunLog log = nav_learning_run(env, config, 2000, {}, 3);
  const NavSnapshot& last = log.snapshots.back();
  ASSERT_TRUE(last.planned_path.has_value());
  EXPECT_EQ(last.planned_path->front(), env.start());
  EXPECT_EQ(last.planned_path->back(), env.goal());
  EXPECT_GT(last.path_length, 0.0);
  const auto oracle = testing::nav_shortest_length(env, env.start(), env.goal());
  ASSERT_TRUE(oracle.has_value());
  EXPECT_GE(last.path_length, *oracle - 1e-12);
}

TEST(NavLearningRun, PresetArenasAreConnectedAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NavEnvironment stat =
        build_nav_environment(NavScenario::kStatic, seed);
    EXPECT_TRUE(testing::nav_shortest_length(stat, stat.start(), stat.goal())
                    .has_value())
        << "static seed " << seed;
    const NavEnvironment dyn =
        build_nav_environment(NavScenario::kDynamic, seed);
    EXPECT_TRUE(testing::nav_shortest_length(dyn, dyn.start(), dyn.goal())
                    .has_value())
        << "dynamic seed " << seed;
  }
}

TEST(NavLearningRun, PlanningNeverMutatesWeights) {
  const NavEnvironment env =
      build_nav_environment(NavScenario::kStatic, 4);
  LearningConfig config;
  NavRunLog log = nav_learning_run(env, config, 100, {}, 4);
  const auto snap = nav_plan_snapshot(env, log.weights, 999);
  EXPECT_EQ(snap.weights_digest, log.snapshots.back().weights_digest);
}

}  // namespace
}  // namespace pathweave
