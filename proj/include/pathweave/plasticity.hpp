#pragma once

#include <algorithm>
#include <stdexcept>

#include "pathweave/graph.hpp"

namespace pathweave {

struct LearningConfig {
  double alpha = 0.02;                 // learning rate
  double beta = 1.0;                   // navigation reward slope
  double weight_min = 0.0;
  double weight_max = 1.0 - 1e-6;      // "0 <= w < 1" realized as a clamp
  unsigned plan_interval = 100;        // iterations between planning snapshots
};

inline void validate(const LearningConfig& config) {
  if (!(config.alpha > 0.0)) {
    throw std::invalid_argument("learning: alpha must be positive");
  }
  if (!(config.weight_min >= 0.0 && config.weight_min < config.weight_max &&
        config.weight_max < 1.0)) {
    throw std::invalid_argument("learning: need 0 <= weight_min < weight_max < 1");
  }
}

// One learning transition. The external input I_e is 1 on exactly the pre
// and post neurons for the duration of the event and 0 elsewhere, so the
// pair is identified by the two ids.
struct TransitionEvent {
  NodeId pre = 0;
  NodeId post = 0;
  double reward = 0.0;
};

// Three-factor rule: delta w = alpha * o_pre * o_post * reward, clamped to
// the configured weight bounds.
inline double hebbian_update(double w, double o_pre, double o_post,
                             double reward, const LearningConfig& config) {
  return std::clamp(w + config.alpha * o_pre * o_post * reward,
                    config.weight_min, config.weight_max);
}

}  // namespace pathweave
