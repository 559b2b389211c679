#pragma once

// Data-parallel helper for the table/verify bulk computations.  Parallelism
// is bounded by the ORBITLATTICE_THREADS environment variable (an integer
// >= 1); unset or unparsable means single-threaded.  Work items must write
// only to their own result slot, which keeps merged output identical to the
// sequential run.

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace orbitlattice::parallel {

inline int thread_count() {
  const char* env = std::getenv("ORBITLATTICE_THREADS");
  if (!env) return 1;
  try {
    const int v = std::stoi(env);
    return v >= 1 ? v : 1;
  } catch (...) {
    return 1;
  }
}

// Invoke f(i) for every i in [0, total), split into contiguous chunks across
// the configured threads.
template <class F>
inline void parallel_for(std::size_t total, F&& f) {
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count()), total);
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (total + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace orbitlattice::parallel
