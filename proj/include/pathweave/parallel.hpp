#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pathweave {

// Computes fn(0..count-1) into a slot-per-index vector. Results land by
// index, so the output is identical for any worker count; only wall time
// changes. fn must not touch shared mutable state.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn fn) {
  std::vector<T> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = std::min<std::size_t>(workers, count);
  pool.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace pathweave
