#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathweave/graph.hpp"
#include "pathweave/nnbf.hpp"
#include "pathweave/plasticity.hpp"
#include "pathweave/rng.hpp"

namespace pathweave {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Rect {
  double x0, y0, x1, y1;
};

// Liang-Barsky clip of segment p->q against an axis-aligned rectangle.
// Touching the boundary counts as intersecting.
inline bool segment_intersects_rect(const Point& p, const Point& q,
                                    const Rect& r) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  double t0 = 0.0;
  double t1 = 1.0;
  const double side_p[4] = {-dx, dx, -dy, dy};
  const double side_q[4] = {p.x - r.x0, r.x1 - p.x, p.y - r.y0, r.y1 - p.y};
  for (int side = 0; side < 4; ++side) {
    if (side_p[side] == 0.0) {
      if (side_q[side] < 0.0) return false;
      continue;
    }
    const double t = side_q[side] / side_p[side];
    if (side_p[side] < 0.0) {
      if (t > t1) return false;
      if (t > t0) t0 = t;
    } else {
      if (t < t0) return false;
      if (t < t1) t1 = t;
    }
  }
  return t0 <= t1;
}

struct NavLayout {
  unsigned grid_m = 5;
  double spacing = 0.2;                // h
  double noise_lo = -0.05;             // a
  double noise_hi = 0.05;              // b
  double theta_d = 0.25;
  std::vector<Rect> obstacles;
};

// Jittered grid of locations plus the feasible-transition adjacency:
// a pair (k, l) is connected iff their Euclidean distance is within
// theta_d and the straight segment between them crosses no obstacle.
// Adjacency is symmetric and realized as directed connections both ways.
struct NavEnvironment {
  NavLayout layout;
  std::uint64_t seed = 0;
  std::vector<Point> locations;
  std::vector<std::vector<NodeId>> neighbors;

  NodeId location_count() const {
    return static_cast<NodeId>(locations.size());
  }
  NodeId start() const { return 0; }  // bottom-left corner
  NodeId goal() const { return location_count() - 1; }  // top-right corner

  double distance(NodeId a, NodeId b) const {
    const double dx = locations[a].x - locations[b].x;
    const double dy = locations[a].y - locations[b].y;
    return std::sqrt(dx * dx + dy * dy);
  }

  bool feasible(NodeId a, NodeId b) const {
    if (a == b || distance(a, b) > layout.theta_d) return false;
    for (const Rect& r : layout.obstacles) {
      if (segment_intersects_rect(locations[a], locations[b], r)) return false;
    }
    return true;
  }

  void rebuild_neighbors() {
    const NodeId n = location_count();
    neighbors.assign(n, {});
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        if (feasible(a, b)) {
          neighbors[a].push_back(b);
          neighbors[b].push_back(a);
        }
      }
    }
  }

  // Dynamic scenario: obstacles vanish, locations and learned weights stay.
  NavEnvironment without_obstacles() const {
    NavEnvironment env = *this;
    env.layout.obstacles.clear();
    env.rebuild_neighbors();
    return env;
  }
};

inline NavEnvironment make_nav_environment(const NavLayout& layout,
                                           std::uint64_t seed) {
  if (layout.grid_m == 0) {
    throw std::invalid_argument("nav: grid_m must be positive");
  }
  NavEnvironment env;
  env.layout = layout;
  env.seed = seed;
  rng::Stream stream(seed);
  const unsigned m = layout.grid_m;
  env.locations.reserve(static_cast<std::size_t>(m) * m);
  for (unsigned j = 1; j <= m; ++j) {
    for (unsigned i = 1; i <= m; ++i) {
      const double x =
          layout.spacing * i + stream.uniform(layout.noise_lo, layout.noise_hi);
      const double y =
          layout.spacing * j + stream.uniform(layout.noise_lo, layout.noise_hi);
      env.locations.push_back({x, y});
    }
  }
  env.rebuild_neighbors();
  return env;
}

enum class NavScenario { kStatic, kDynamic };

// Preset arenas. Static: narrow theta_d with several small blocks that bend
// the best route into an S around the lower-middle wall and under-the-top
// ledge. Dynamic: wider theta_d (diagonals reachable) with one tall bar
// between the third and fourth columns that is removed mid-run.
inline NavEnvironment build_nav_environment(NavScenario scenario,
                                            std::uint64_t seed) {
  NavLayout layout;
  if (scenario == NavScenario::kStatic) {
    layout.theta_d = 0.25;
    layout.obstacles = {
        {0.47, 0.11, 0.53, 0.29},  // column 2|3 gap, row 1
        {0.47, 0.31, 0.53, 0.49},  // column 2|3 gap, row 2
        {0.47, 0.51, 0.53, 0.69},  // column 2|3 gap, row 3
        {0.11, 0.87, 0.29, 0.93},  // row 4|5 gap, column 1
        {0.31, 0.87, 0.49, 0.93},  // row 4|5 gap, column 2
        {0.51, 0.87, 0.69, 0.93},  // row 4|5 gap, column 3
    };
  } else {
    layout.theta_d = 0.35;
    layout.obstacles = {
        {0.67, 0.0, 0.73, 0.85},  // bar between columns 3 and 4
    };
  }
  return make_nav_environment(layout, seed);
}

// One exploration move: uniformly random feasible neighbor, reward falling
// linearly with the transition distance (R = 1 - beta * d). nullopt when
// the current location has no feasible neighbor; the caller restarts the
// walk at the start location.
inline std::optional<TransitionEvent> nav_explore_step(
    const NavEnvironment& env, NodeId current, const LearningConfig& config,
    rng::Stream& stream) {
  const auto& options = env.neighbors[current];
  if (options.empty()) return std::nullopt;
  const auto pick = static_cast<std::size_t>(stream.uniform01() *
                                             static_cast<double>(options.size()));
  const NodeId next = options[pick < options.size() ? pick : options.size() - 1];
  TransitionEvent event;
  event.pre = current;
  event.post = next;
  event.reward = 1.0 - config.beta * env.distance(current, next);
  return event;
}

struct NavSnapshot {
  unsigned iteration = 0;
  std::optional<std::vector<NodeId>> planned_path;
  double path_length = 0.0;  // Euclidean, 0 when no path
  std::uint64_t weights_digest = 0;
};

struct NavRunLog {
  std::vector<NavSnapshot> snapshots;
  std::vector<double> weights;  // row-major location_count x location_count
  unsigned restarts = 0;
};

namespace detail {

inline std::uint64_t digest_weights(const std::vector<double>& weights) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (double w : weights) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(w));
    std::memcpy(&bits, &w, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      hash ^= (bits >> (8 * i)) & 0xff;
      hash *= 0x100000001b3ull;
    }
  }
  return hash;
}

inline Network nav_network(const NavEnvironment& env,
                           const std::vector<double>& weights) {
  const NodeId n = env.location_count();
  std::vector<std::vector<Connection>> incoming(n);
  for (NodeId to = 0; to < n; ++to) {
    for (NodeId from : env.neighbors[to]) {
      incoming[to].push_back(
          {from, weights[from * n + to], env.distance(from, to)});
    }
  }
  return Network(n, std::move(incoming));
}

}  // namespace detail

// Plans on the current weights without external inputs; learning events
// never run here.
inline NavSnapshot nav_plan_snapshot(const NavEnvironment& env,
                                     const std::vector<double>& weights,
                                     unsigned iteration) {
  NavSnapshot snap;
  snap.iteration = iteration;
  snap.weights_digest = detail::digest_weights(weights);
  const Network network = detail::nav_network(env, weights);
  const ActivationResult act = nnbf_solve(network, env.start(), true);
  auto path = reconstruct_path_from_max_inputs(act, env.goal());
  if (path) {
    double length = 0.0;
    for (std::size_t i = 1; i < path->size(); ++i) {
      length += env.distance((*path)[i - 1], (*path)[i]);
    }
    snap.planned_path = std::move(path);
    snap.path_length = length;
  }
  return snap;
}

// Random exploration with the three-factor update on every transition
// (learning-mode outputs are clamped to 1 by the external inputs, so the
// update is alpha * R on the traversed direction only). Planning snapshots
// are taken at iteration 0, every plan_interval iterations, and at the end.
// In the dynamic scenario obstacles are removed right after the snapshot
// point at obstacle_removal_at; learned weights are preserved and newly
// feasible pairs start at zero.
inline NavRunLog nav_learning_run(const NavEnvironment& initial_env,
                                  const LearningConfig& config,
                                  unsigned total_iterations,
                                  std::optional<unsigned> obstacle_removal_at,
                                  std::uint64_t seed) {
  validate(config);
  NavEnvironment env = initial_env;
  const NodeId n = env.location_count();
  NavRunLog log;
  log.weights.assign(static_cast<std::size_t>(n) * n, 0.0);
  rng::Stream stream(seed);
  NodeId current = env.start();

  log.snapshots.push_back(nav_plan_snapshot(env, log.weights, 0));
  for (unsigned t = 1; t <= total_iterations; ++t) {
    const auto event = nav_explore_step(env, current, config, stream);
    if (!event) {
      ++log.restarts;
      current = env.start();
    } else {
      double& w = log.weights[event->pre * n + event->post];
      w = hebbian_update(w, 1.0, 1.0, event->reward, config);
      current = event->post;
    }
    const bool at_interval = config.plan_interval != 0 &&
                             t % config.plan_interval == 0;
    if (at_interval || t == total_iterations) {
      log.snapshots.push_back(nav_plan_snapshot(env, log.weights, t));
    }
    if (obstacle_removal_at && t == *obstacle_removal_at) {
      env = env.without_obstacles();
    }
  }
  return log;
}

}  // namespace pathweave
