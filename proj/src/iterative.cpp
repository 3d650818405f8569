#include "graphcolor/iterative.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include "worker_team.hpp"

namespace graphcolor {

namespace {

void check_policy(const SchedulePolicy& policy) {
  if (policy.workers < 1) {
    throw std::invalid_argument("worker count must be >= 1");
  }
  if (policy.chunking == Chunking::kDynamic && policy.chunk_size < 1) {
    throw std::invalid_argument("chunk size must be >= 1");
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Dispatches [0, count) ranges of the pending set to workers under the
// policy's chunking mode. body(worker_id, begin, end) must be safe to run
// concurrently on disjoint ranges.
template <class Body>
void parallel_over(std::size_t count, const SchedulePolicy& policy,
                   Body&& body) {
  if (count == 0) return;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(policy.workers, count));
  if (policy.chunking == Chunking::kStatic) {
    detail::run_workers(workers, [&](unsigned id) {
      auto [begin, end] = detail::static_block(count, workers, id);
      if (begin < end) body(id, begin, end);
    });
  } else {
    std::atomic<std::size_t> cursor{0};
    detail::run_workers(workers, [&](unsigned id) {
      for (;;) {
        const std::size_t begin =
            cursor.fetch_add(policy.chunk_size, std::memory_order_relaxed);
        if (begin >= count) break;
        body(id, begin, std::min(begin + policy.chunk_size, count));
      }
    });
  }
}

}  // namespace

void tentative_round(const Graph& g, std::span<const Vertex> pending,
                     Coloring& colors, const SchedulePolicy& policy) {
  check_policy(policy);
  std::vector<ForbiddenMarks> worker_marks(policy.workers,
                                           ForbiddenMarks::for_graph(g));
  parallel_over(pending.size(), policy,
                [&](unsigned id, std::size_t begin, std::size_t end) {
                  ForbiddenMarks& marks = worker_marks[id];
                  for (std::size_t k = begin; k < end; ++k) {
                    const Vertex v = pending[k];
                    for (Vertex w : g.neighbors(v)) {
                      const Color cw = std::atomic_ref<Color>(colors[w]).load(
                          std::memory_order_relaxed);
                      marks.mark(cw, v);
                    }
                    std::atomic_ref<Color>(colors[v])
                        .store(marks.first_permissible(v),
                               std::memory_order_relaxed);
                  }
                });
}

std::vector<Vertex> detect_conflicts(const Graph& g,
                                     std::span<const Vertex> pending,
                                     const Coloring& colors,
                                     const SchedulePolicy& policy) {
  check_policy(policy);
  std::vector<std::vector<Vertex>> found(policy.workers);
  parallel_over(pending.size(), policy,
                [&](unsigned id, std::size_t begin, std::size_t end) {
                  auto& local = found[id];
                  for (std::size_t k = begin; k < end; ++k) {
                    const Vertex v = pending[k];
                    for (Vertex w : g.neighbors(v)) {
                      if (colors[v] == colors[w] && v > w) {
                        local.push_back(v);
                        break;
                      }
                    }
                  }
                });
  std::vector<Vertex> recolor;
  for (auto& local : found) {
    recolor.insert(recolor.end(), local.begin(), local.end());
  }
  std::sort(recolor.begin(), recolor.end());
  return recolor;
}

IterativeResult iterative_color(const Graph& g, const SchedulePolicy& policy) {
  check_policy(policy);
  IterativeResult result;
  result.colors.assign(g.n(), 0);

  std::vector<Vertex> pending = natural_order(g.n());
  std::size_t round = 1;
  while (!pending.empty()) {
    SchedulePolicy round_policy = policy;
    if (policy.sequential_cutoff > 0 &&
        pending.size() <= policy.sequential_cutoff) {
      round_policy.workers = 1;
    }

    RoundStats stats;
    stats.round = round;
    stats.pending = pending.size();

    auto t0 = std::chrono::steady_clock::now();
    tentative_round(g, pending, result.colors, round_policy);
    stats.tentative_seconds = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    std::vector<Vertex> recolor =
        detect_conflicts(g, pending, result.colors, round_policy);
    stats.detect_seconds = seconds_since(t1);

    stats.conflicts = recolor.size();
    result.rounds.push_back(stats);
    pending = std::move(recolor);
    ++round;
  }
  return result;
}

}  // namespace graphcolor
