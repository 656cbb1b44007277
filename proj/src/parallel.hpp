#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pcube::detail {

// Calls fn(i) for every i in [0, count) using up to `threads` workers. Work
// items are claimed in ascending order; callers write results into
// per-index slots so the outcome never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < std::min(workers, count); ++t) pool.emplace_back(run);
  run();
}

}  // namespace pcube::detail
