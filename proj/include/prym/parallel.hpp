#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace prym {

// Worker count: hardware concurrency, capped by PRYM_VERIFY_THREADS.
inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("PRYM_VERIFY_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < n) n = cap;
  }
  return n;
}

// Runs body(chunk_begin, chunk_end, chunk_index) over [0, total) split into
// contiguous chunks. Callers write into per-chunk slots and merge in chunk
// order, so results do not depend on scheduling.
inline void parallel_chunks(std::size_t total, int threads, std::size_t chunks,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (chunks == 0) return;
  const std::size_t per = (total + chunks - 1) / chunks;
  auto run = [&](std::size_t c) {
    const std::size_t b = c * per;
    const std::size_t e = std::min(total, b + per);
    if (b < e) body(b, e, c);
  };
  if (threads <= 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c = static_cast<std::size_t>(t); c < chunks; c += static_cast<std::size_t>(threads)) run(c);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace prym
