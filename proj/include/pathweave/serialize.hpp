#pragma once

#include <json.hpp>

#include "pathweave/bellman_ford.hpp"
#include "pathweave/nnbf.hpp"

namespace pathweave {

// Result JSON: infinity serialized as the string "inf", missing ids as null.

inline nlohmann::json to_json(const ShortestPathResult& result) {
  nlohmann::json j;
  j["source"] = result.source;
  auto distances = nlohmann::json::array();
  for (double d : result.distances) {
    if (d == kInfDistance) {
      distances.push_back("inf");
    } else {
      distances.push_back(d);
    }
  }
  j["distances"] = std::move(distances);
  auto predecessors = nlohmann::json::array();
  for (NodeId p : result.predecessors) {
    if (p == kNoNode) {
      predecessors.push_back(nullptr);
    } else {
      predecessors.push_back(p);
    }
  }
  j["predecessors"] = std::move(predecessors);
  j["iterations"] = result.iterations_used;
  j["converged"] = result.converged;
  j["negative_cycle"] = result.negative_cycle_detected;
  return j;
}

inline nlohmann::json to_json(const ActivationResult& result) {
  nlohmann::json j;
  j["source"] = result.source;
  j["activations"] = result.activations;
  auto max_inputs = nlohmann::json::array();
  for (NodeId p : result.max_inputs) {
    if (p == kNoNode) {
      max_inputs.push_back(nullptr);
    } else {
      max_inputs.push_back(p);
    }
  }
  j["max_inputs"] = std::move(max_inputs);
  j["iterations"] = result.iterations_used;
  j["converged"] = result.converged;
  return j;
}

}  // namespace pathweave
