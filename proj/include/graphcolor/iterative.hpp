#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphcolor/coloring.hpp"
#include "graphcolor/graph.hpp"

namespace graphcolor {

enum class Chunking { kStatic, kDynamic };

struct SchedulePolicy {
  unsigned workers = 1;
  // Static splits the pending set into `workers` contiguous blocks; dynamic
  // hands out chunks of `chunk_size` from a shared cursor.
  Chunking chunking = Chunking::kStatic;
  std::size_t chunk_size = 1024;
  // When > 0, rounds whose pending set is at most this size run on a single
  // worker. 0 disables the cutoff.
  std::size_t sequential_cutoff = 0;
};

struct RoundStats {
  std::size_t round = 0;      // 1-based
  std::size_t pending = 0;    // |U| entering the round
  std::size_t conflicts = 0;  // |R| leaving the round
  double tentative_seconds = 0.0;
  double detect_seconds = 0.0;
};

struct IterativeResult {
  Coloring colors;
  std::vector<RoundStats> rounds;
};

// Phase 1: speculative first-fit coloring of every vertex in `pending`.
// Neighbor colors are read through per-slot atomics; concurrent reads may
// observe stale or fresh values — conflicts are caught in phase 2. Each
// worker uses a private ForbiddenMarks.
void tentative_round(const Graph& g, std::span<const Vertex> pending,
                     Coloring& colors, const SchedulePolicy& policy);

// Phase 2: returns {v in pending : exists w in adj(v) with
// colors[v] == colors[w] and v > w}, sorted ascending. Deterministic for
// fixed colors regardless of worker count.
std::vector<Vertex> detect_conflicts(const Graph& g,
                                     std::span<const Vertex> pending,
                                     const Coloring& colors,
                                     const SchedulePolicy& policy);

// Rounds of tentative coloring plus conflict detection over a shrinking
// pending set until no conflicts remain. The lowest-index vertex of a
// nonempty pending set is never recolored, so the set shrinks every round.
// With workers == 1 the result is bit-identical to greedy_color in natural
// order. Throws std::invalid_argument on an invalid policy.
IterativeResult iterative_color(const Graph& g,
                                const SchedulePolicy& policy = {});

}  // namespace graphcolor
