#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphcolor/graph.hpp"

namespace graphcolor {

using Color = std::uint32_t;

// Vertex-indexed color array; 0 means uncolored, assigned colors are >= 1.
using Coloring = std::vector<Color>;

// Color-indexed scratch array for first-fit color selection. A color slot is
// forbidden to vertex v exactly when it holds the label v, so the array never
// needs reinitialization between vertices: stale labels from other vertices
// read as permissible.
class ForbiddenMarks {
 public:
  // slots must be at least max_degree + 2; sentinel must not equal any
  // vertex id (the graph's n works).
  ForbiddenMarks(std::size_t slots, Vertex sentinel)
      : marks_(slots, sentinel) {}

  // Sized max_degree + 2 with sentinel n.
  static ForbiddenMarks for_graph(const Graph& g) {
    return ForbiddenMarks(static_cast<std::size_t>(g.max_degree()) + 2, g.n());
  }

  void mark(Color c, Vertex v) { marks_[c] = v; }

  // min{i > 0 : marks[i] != v}; at most deg(v)+1 probes when v marked at
  // most deg(v) colors.
  Color first_permissible(Vertex v) const {
    Color c = 1;
    while (marks_[c] == v) ++c;
    return c;
  }

  std::size_t slots() const { return marks_.size(); }

 private:
  std::vector<Vertex> marks_;
};

std::vector<Vertex> natural_order(Vertex n);

// First-fit greedy coloring over the given vertex order. Every vertex gets a
// color in [1, deg(v)+1]; total work is O(n + m). Throws
// std::invalid_argument if order is not a permutation of [0, n).
Coloring greedy_color(const Graph& g, std::span<const Vertex> order);
Coloring greedy_color(const Graph& g);  // natural (increasing index) order

struct VerifyReport {
  std::vector<Edge> conflicts;    // edges (v,w), v < w, with equal colors != 0
  std::vector<Vertex> uncolored;  // vertices with color 0
  bool ok() const { return conflicts.empty() && uncolored.empty(); }
};

// Empty report iff c is a valid complete coloring of g.
VerifyReport verify_coloring(const Graph& g, const Coloring& c);

// Largest color in a complete coloring (0 for the empty graph). Throws
// std::invalid_argument if any vertex is uncolored.
Color num_colors(const Coloring& c);

}  // namespace graphcolor
