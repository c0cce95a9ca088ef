// Deterministic parallel map over an index range. Scan grids and eigensolves
// are embarrassingly parallel; every worker writes only its own output slots,
// so results are independent of scheduling and of the thread count.
#ifndef MINLEN_PARALLEL_HPP
#define MINLEN_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace minlen {

/// Worker count: hardware concurrency capped by the MINLEN_THREADS
/// environment variable (>= 1).
int worker_count();

template <typename F>
void parallel_for(std::size_t n, F&& body) {
  std::size_t workers = static_cast<std::size_t>(worker_count());
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

} // namespace minlen

#endif
