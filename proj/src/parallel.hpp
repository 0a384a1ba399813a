#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cycleforge::detail {

// Runs task(worker, item) for item in [0, count) on up to `threads` workers.
// Items are handed out dynamically; callers keep per-item result slots so the
// final reduction does not depend on the schedule. The first exception thrown
// by any task stops the remaining items and is rethrown to the caller.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  const std::size_t wanted = threads == 0 ? 1 : threads;
  const auto workers = static_cast<unsigned>(std::min(wanted, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(0u, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(w, i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cycleforge::detail
