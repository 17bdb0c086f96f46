#pragma once

#include <functional>
#include <thread>
#include <vector>

#include "torq/env.hpp"

namespace torq {

// Runs fn(i) for i in [0, n). With TORQ_THREADS > 1 the index range is split
// into contiguous chunks, one per worker. Callers get determinism by writing
// results into preallocated slots addressed by i.
inline void parallel_for(long n, const std::function<void(long)>& fn) {
  int workers = thread_count();
  if (workers <= 1 || n < 64) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<int>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    long lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace torq
