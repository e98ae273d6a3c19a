#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rfpca::detail {

// Runs fn(begin, end) over contiguous chunks of [0, n) on up to `threads`
// threads. Callers must write only to per-index slots so that the result is
// independent of the thread count.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t t =
      std::min<std::size_t>(threads > 1 ? static_cast<std::size_t>(threads) : 1, n);
  if (t <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t chunk = (n + t - 1) / t;
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t begin = k * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

inline int hardware_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace rfpca::detail
