#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathweave/rng.hpp"

namespace pathweave {

inline constexpr std::string_view kVersion = "0.1.0";

// FNV-1a 64-bit over a file's bytes; enough to compare reruns for
// byte-identical output, not a cryptographic digest.
inline std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("digest: cannot open " + path);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  char chunk[4096];
  while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(chunk[i]);
      hash *= 0x100000001b3ull;
    }
  }
  return hash;
}

inline std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

// One manifest per command run: the config echo plus output digests make a
// run replayable and its data files checkable byte for byte.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::string rng_id{rng::kGeneratorId};
  std::string version{kVersion};
  std::string started_at;
  std::string finished_at;
  std::vector<std::pair<std::string, std::string>> output_digests;

  static std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
  }

  void add_output(const std::string& path) {
    output_digests.emplace_back(path, "fnv1a64:" + hex64(fnv1a64_file(path)));
  }

  void write(const std::string& path) const {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config;
    j["seed"] = seed;
    j["rng"] = rng_id;
    j["version"] = version;
    j["started_at"] = started_at;
    j["finished_at"] = finished_at;
    nlohmann::json outputs = nlohmann::json::array();
    for (const auto& [file, digest] : output_digests) {
      outputs.push_back({{"file", file}, {"digest", digest}});
    }
    j["outputs"] = outputs;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("manifest: cannot open " + path);
    out << j.dump(2) << '\n';
  }
};

}  // namespace pathweave
