#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace powmap {

inline unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Evaluates fn(0..n-1) across `workers` threads and returns the results in
/// index order. Each index writes only its own slot, so the output is
/// independent of scheduling. The first exception is rethrown after join.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, unsigned workers, Fn&& fn) {
  std::vector<R> results(n);
  if (n == 0) return results;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  unsigned count = workers < n ? workers : static_cast<unsigned>(n);
  threads.reserve(count);
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace powmap
