#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcolor/coloring.hpp"
#include "graphcolor/graph.hpp"

namespace graphcolor {

// Thrown when a blocking read exceeds its wait timeout. Must never fire in a
// correct run; it exists to turn a hang into a diagnosable failure.
class DeadlockSuspicionError : public std::runtime_error {
 public:
  DeadlockSuspicionError(Vertex vertex, std::chrono::milliseconds waited)
      : std::runtime_error("no publication for vertex " +
                           std::to_string(vertex) + " after " +
                           std::to_string(waited.count()) +
                           " ms; suspecting deadlock"),
        vertex_(vertex) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

// Shared color array with per-slot publication state: each slot is either
// empty or holds a published color, and transitions empty -> full exactly
// once per run. Publication is a release store and blocking reads acquire,
// so a reader that sees the slot full also sees the published value.
// Published colors are positive; an empty slot reads as value 0.
class ColorBoard {
 public:
  explicit ColorBoard(Vertex n) : slots_(n) {}

  // Resets every slot to (0, empty). Idempotent; callers must be quiesced.
  void purge();

  bool full(Vertex v) const {
    return slots_[v].load(std::memory_order_acquire) != 0;
  }

  // Value without waiting: 0 while empty, the color once full.
  Color peek(Vertex v) const {
    return slots_[v].load(std::memory_order_acquire);
  }

  // Waits until v's slot is full and returns the published color; the slot
  // stays full. Spins briefly, then yields, then sleeps; throws
  // DeadlockSuspicionError naming v once `timeout` elapses.
  Color read_blocking(Vertex v, std::chrono::milliseconds timeout) const;

  // Publishes color c (> 0) for v and marks the slot full. Throws
  // std::logic_error if the slot is already full (protocol violation) or if
  // c == 0.
  void publish(Vertex v, Color c);

  Vertex size() const { return static_cast<Vertex>(slots_.size()); }

 private:
  std::vector<std::atomic<Color>> slots_;
};

// Vertex-indexed atomic counters; the claimant that observes the
// pre-increment value 0 becomes the unique processor of that vertex.
class ClaimTable {
 public:
  explicit ClaimTable(Vertex n) : state_(n) {}

  void reset();

  // Atomically increments v's counter; true iff this call saw 0.
  bool claim(Vertex v) {
    return state_[v].fetch_add(1, std::memory_order_relaxed) == 0;
  }

  Vertex size() const { return static_cast<Vertex>(state_.size()); }

 private:
  std::vector<std::atomic<std::uint32_t>> state_;
};

struct DataflowOptions {
  unsigned workers = 1;
  std::chrono::milliseconds wait_timeout{30000};
  // When nonzero, each worker visits its vertex range in a deterministically
  // shuffled order; used to randomize schedules in stress tests. The final
  // coloring is independent of the schedule either way.
  std::uint64_t schedule_seed = 0;
};

struct DataflowMetrics {
  // Deepest chain of vertices processed inline off one claim.
  std::size_t max_chain = 0;
};

// Colors v and, transitively, every unprocessed lower-index neighbor it
// claims along the way. For each lower neighbor in adjacency order: attempt
// a claim, process the neighbor on success, then read its color and mark it
// forbidden; finally publish the first permissible color for v. Runs on an
// explicit work stack, so a descending chain of length n needs O(n) heap
// instead of call-stack depth. The caller must hold the successful claim on
// v; `marks` may be shared across every vertex this worker processes.
void process_vertex(const Graph& g, Vertex v, ColorBoard& board,
                    ClaimTable& claims, ForbiddenMarks& marks,
                    std::chrono::milliseconds timeout,
                    std::size_t* max_chain = nullptr);

// Purges the board, zeroes the claim table, then claims and processes all
// vertices in parallel. The color of each vertex is first-fit over the final
// colors of its lower-index neighbors, so the result is bit-identical to
// greedy_color in natural order for every worker count and schedule.
Coloring dataflow_color(const Graph& g, const DataflowOptions& options,
                        DataflowMetrics* metrics = nullptr);
Coloring dataflow_color(const Graph& g, unsigned workers);

}  // namespace graphcolor
