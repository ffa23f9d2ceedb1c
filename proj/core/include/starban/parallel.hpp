#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace starban::num {

// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
// results in index order, so the output is independent of scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> out(count);
  if (count == 0) return out;
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const unsigned n_workers =
      std::min<std::size_t>(threads, count) > 0
          ? static_cast<unsigned>(std::min<std::size_t>(threads, count))
          : 1u;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace starban::num
