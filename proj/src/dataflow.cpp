#include "graphcolor/dataflow.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "graphcolor/rng.hpp"
#include "worker_team.hpp"

namespace graphcolor {

void ColorBoard::purge() {
  for (auto& slot : slots_) slot.store(0, std::memory_order_relaxed);
}

Color ColorBoard::read_blocking(Vertex v,
                                std::chrono::milliseconds timeout) const {
  const auto& slot = slots_[v];
  Color c = slot.load(std::memory_order_acquire);
  if (c != 0) return c;

  const auto start = std::chrono::steady_clock::now();
  unsigned spins = 0;
  for (;;) {
    c = slot.load(std::memory_order_acquire);
    if (c != 0) return c;
    ++spins;
    if (spins < 64) {
      // busy wait
    } else if (spins < 4096) {
      std::this_thread::yield();
    } else {
      std::this_thread::sleep_for(std::chrono::microseconds(100));
    }
    if ((spins & 0x3f) == 0 &&
        std::chrono::steady_clock::now() - start >= timeout) {
      throw DeadlockSuspicionError(v, timeout);
    }
  }
}

void ColorBoard::publish(Vertex v, Color c) {
  if (c == 0) throw std::logic_error("published color must be positive");
  Color expected = 0;
  if (!slots_[v].compare_exchange_strong(expected, c,
                                         std::memory_order_release,
                                         std::memory_order_relaxed)) {
    throw std::logic_error("vertex " + std::to_string(v) +
                           " already published");
  }
}

void ClaimTable::reset() {
  for (auto& s : state_) s.store(0, std::memory_order_relaxed);
}

namespace {

struct Frame {
  Vertex v;
  std::size_t next;  // next position in v's neighbor list
  bool remark;       // re-read visited lower neighbors before continuing
};

}  // namespace

void process_vertex(const Graph& g, Vertex v, ColorBoard& board,
                    ClaimTable& claims, ForbiddenMarks& marks,
                    std::chrono::milliseconds timeout,
                    std::size_t* max_chain) {
  std::vector<Frame> stack;
  stack.push_back({v, 0, false});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const Vertex cur = frame.v;
    const auto adj = g.neighbors(cur);

    if (frame.remark) {
      // A nested vertex ran with the same marks array and may have relabeled
      // slots set for `cur`; its neighbors visited so far are all published,
      // so re-reading them restores the labels without blocking.
      for (std::size_t k = 0; k < frame.next; ++k) {
        const Vertex w = adj[k];
        if (w < cur) marks.mark(board.read_blocking(w, timeout), cur);
      }
      frame.remark = false;
    }

    bool descended = false;
    while (frame.next < adj.size()) {
      const Vertex w = adj[frame.next];
      ++frame.next;
      if (w >= cur) continue;
      if (claims.claim(w)) {
        // Process the freshly claimed neighbor before reading its color.
        // `frame` dangles once the stack grows, so flag it first.
        frame.remark = true;
        stack.push_back({w, 0, false});
        descended = true;
        break;
      }
      marks.mark(board.read_blocking(w, timeout), cur);
    }
    if (descended) {
      if (max_chain) *max_chain = std::max(*max_chain, stack.size());
      continue;
    }
    board.publish(cur, marks.first_permissible(cur));
    stack.pop_back();
  }
}

Coloring dataflow_color(const Graph& g, const DataflowOptions& options,
                        DataflowMetrics* metrics) {
  if (options.workers < 1) {
    throw std::invalid_argument("worker count must be >= 1");
  }
  const Vertex n = g.n();
  ColorBoard board(n);
  board.purge();
  ClaimTable claims(n);
  claims.reset();

  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(options.workers, std::max<Vertex>(n, 1)));
  std::vector<std::size_t> chains(workers, 1);

  detail::run_workers(workers, [&](unsigned id) {
    auto [begin, end] = detail::static_block(n, workers, id);
    if (begin >= end) return;
    ForbiddenMarks marks = ForbiddenMarks::for_graph(g);

    std::vector<Vertex> order;
    order.reserve(end - begin);
    for (std::size_t k = begin; k < end; ++k) {
      order.push_back(static_cast<Vertex>(k));
    }
    if (options.schedule_seed != 0) {
      const CounterRng rng{mix64(options.schedule_seed) + id};
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.bounded(i, i)]);
      }
    }

    for (Vertex v : order) {
      if (claims.claim(v)) {
        process_vertex(g, v, board, claims, marks, options.wait_timeout,
                       &chains[id]);
      }
    }
  });

  if (metrics) {
    metrics->max_chain = n == 0 ? 0 : *std::max_element(chains.begin(),
                                                        chains.end());
  }

  Coloring colors(n);
  for (Vertex v = 0; v < n; ++v) colors[v] = board.peek(v);
  return colors;
}

Coloring dataflow_color(const Graph& g, unsigned workers) {
  DataflowOptions options;
  options.workers = workers;
  return dataflow_color(g, options);
}

}  // namespace graphcolor
