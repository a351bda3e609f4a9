#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace regimefactor {

// Thread budget: --threads flag > REGIMEFACTOR_THREADS env > hardware.
inline int& thread_count_ref() {
  static int n = 0; // 0 = not resolved yet
  return n;
}

inline void set_thread_count(int n) { thread_count_ref() = std::max(1, n); }

inline int thread_count() {
  int& n = thread_count_ref();
  if (n == 0) {
    if (const char* env = std::getenv("REGIMEFACTOR_THREADS")) {
      const int v = std::atoi(env);
      if (v > 0) n = v;
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  }
  return n;
}

// Runs fn(i) for i in [0, n).  Results must be written into pre-sized slots
// indexed by i so the output is independent of the schedule.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int nthreads = std::min<std::size_t>(thread_count(), n);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

} // namespace regimefactor
