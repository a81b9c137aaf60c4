#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathweave/csv.hpp"
#include "pathweave/graph.hpp"

namespace pathweave {

// Edge-list text format:
//   # optional comments
//   nodes N
//   u v cost
// One edge per line, whitespace separated. The header line is mandatory.
inline Graph read_graph_text(std::istream& in) {
  std::string line;
  long long node_count = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (node_count < 0) {
      std::string keyword;
      if (!(fields >> keyword)) continue;  // blank or comment-only line
      long long n;
      if (keyword != "nodes" || !(fields >> n) || n <= 0) {
        throw std::runtime_error("graph text: expected header 'nodes N' at line " +
                                 std::to_string(line_no));
      }
      node_count = n;
      continue;
    }
    long long u, v;
    double cost;
    if (!(fields >> u)) continue;
    if (!(fields >> v >> cost)) {
      throw std::runtime_error("graph text: malformed edge at line " +
                               std::to_string(line_no));
    }
    if (u < 0 || v < 0) {
      throw std::runtime_error("graph text: negative node id at line " +
                               std::to_string(line_no));
    }
    edges.push_back(
        {static_cast<NodeId>(u), static_cast<NodeId>(v), cost});
  }
  if (node_count < 0) {
    throw std::runtime_error("graph text: missing 'nodes N' header");
  }
  return Graph(static_cast<NodeId>(node_count), std::move(edges));
}

inline void write_graph_text(std::ostream& out, const Graph& graph) {
  out << "nodes " << graph.node_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.from << ' ' << e.to << ' ' << format_number(e.cost) << '\n';
  }
}

// JSON mirror: {"nodes": N, "edges": [[u, v, cost], ...]}
inline Graph read_graph_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.contains("nodes") || !j.contains("edges")) {
    throw std::runtime_error("graph json: need 'nodes' and 'edges' fields");
  }
  const auto node_count = j.at("nodes").get<long long>();
  if (node_count <= 0) {
    throw std::runtime_error("graph json: node count must be positive");
  }
  std::vector<Edge> edges;
  for (const auto& entry : j.at("edges")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::runtime_error("graph json: edge entries are [u, v, cost]");
    }
    edges.push_back({entry[0].get<NodeId>(), entry[1].get<NodeId>(),
                     entry[2].get<double>()});
  }
  return Graph(static_cast<NodeId>(node_count), std::move(edges));
}

inline void write_graph_json(std::ostream& out, const Graph& graph) {
  nlohmann::json j;
  j["nodes"] = graph.node_count();
  auto edges = nlohmann::json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({e.from, e.to, e.cost});
  }
  j["edges"] = std::move(edges);
  out << j.dump() << '\n';
}

inline bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return has_json_extension(path) ? read_graph_json(in) : read_graph_text(in);
}

inline void write_graph_file(const std::string& path, const Graph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open graph file " + path);
  if (has_json_extension(path)) {
    write_graph_json(out, graph);
  } else {
    write_graph_text(out, graph);
  }
}

}  // namespace pathweave
