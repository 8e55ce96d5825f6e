#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace vnorm {

// Runs fn(i) for every i in [0, count) on up to `jobs` threads (jobs <= 0
// means all hardware threads). Work items are handed out dynamically, so fn
// must be safe to call concurrently for distinct indices and should write only
// to per-index slots.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t n_threads = jobs > 0 ? static_cast<std::size_t>(jobs) : (hw ? hw : 1);
  if (n_threads > count) n_threads = count;
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace vnorm
