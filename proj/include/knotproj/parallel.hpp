#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace knotproj {

struct ExecPolicy {
  unsigned threads = 1;
};

/// Calls fn(i) for every i in [0, n). Work is handed out index by index, so
/// results written to slot i are independent of the thread count. The first
/// exception thrown by any call is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, const ExecPolicy& policy, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, policy.threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace knotproj
