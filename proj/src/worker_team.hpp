#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace graphcolor::detail {

// Runs f(worker_id) on `workers` threads and joins them all. worker_id 0
// runs inline when workers == 1. The first exception thrown by any worker
// is rethrown after the join.
template <class F>
void run_workers(unsigned workers, F&& f) {
  if (workers <= 1) {
    f(0u);
    return;
  }
  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> team;
  team.reserve(workers);
  for (unsigned id = 0; id < workers; ++id) {
    team.emplace_back([&, id] {
      try {
        f(id);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : team) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Contiguous block [begin, end) of `count` items for one of `workers`
// equally loaded workers.
inline std::pair<std::size_t, std::size_t> static_block(std::size_t count,
                                                        unsigned workers,
                                                        unsigned id) {
  const std::size_t base = count / workers;
  const std::size_t extra = count % workers;
  const std::size_t begin = id * base + std::min<std::size_t>(id, extra);
  return {begin, begin + base + (id < extra ? 1 : 0)};
}

}  // namespace graphcolor::detail
