#include "graphcolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphcolor {

std::vector<Vertex> natural_order(Vertex n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

namespace {

void check_permutation(std::span<const Vertex> order, Vertex n) {
  if (order.size() != n) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("order is not a permutation of [0, n)");
    }
    seen[v] = true;
  }
}

}  // namespace

Coloring greedy_color(const Graph& g, std::span<const Vertex> order) {
  check_permutation(order, g.n());
  Coloring colors(g.n(), 0);
  ForbiddenMarks marks = ForbiddenMarks::for_graph(g);
  for (Vertex v : order) {
    // Uncolored neighbors mark slot 0, which the scan below never probes.
    for (Vertex w : g.neighbors(v)) marks.mark(colors[w], v);
    colors[v] = marks.first_permissible(v);
  }
  return colors;
}

Coloring greedy_color(const Graph& g) {
  return greedy_color(g, natural_order(g.n()));
}

VerifyReport verify_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.n()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) +
                                " entries for a graph with n=" +
                                std::to_string(g.n()));
  }
  VerifyReport report;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c[v] == 0) report.uncolored.push_back(v);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c[v] == 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w > v && c[v] == c[w]) report.conflicts.emplace_back(v, w);
    }
  }
  return report;
}

Color num_colors(const Coloring& c) {
  Color max_color = 0;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v] == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is uncolored");
    }
    max_color = std::max(max_color, c[v]);
  }
  return max_color;
}

}  // namespace graphcolor
