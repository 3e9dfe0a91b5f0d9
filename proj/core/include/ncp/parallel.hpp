#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ncp {

/// Worker count from the NCP_THREADS environment variable, falling back to
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(worker, i) for every i in [0, n). Items are handed out
/// dynamically; callers merge per-worker results in a canonical order.
template <class Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(std::size_t{0}, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(w, i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ncp
