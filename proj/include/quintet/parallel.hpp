#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace quintet {

// Runs fn(i) for i in [0, count) on up to `workers` threads.
// Work is dealt in fixed contiguous stripes, so any per-index output written
// into a preallocated slot is identical regardless of the worker count.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  if (count == 0) return;
  if (workers < 1) workers = 1;
  std::size_t nthreads = std::min<std::size_t>(workers, count);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace quintet
