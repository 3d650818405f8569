#include "graphcolor/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphcolor/rng.hpp"

namespace graphcolor {

Graph::Graph(Vertex n, std::vector<Offset> offsets,
             std::vector<Vertex> neighbors)
    : n_(n), offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {
  assert(offsets_.size() == static_cast<std::size_t>(n_) + 1);
  assert(offsets_.back() == neighbors_.size());
  for (Vertex v = 0; v < n_; ++v) {
    max_degree_ = std::max(max_degree_, static_cast<Vertex>(degree(v)));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph build_graph(std::span<const Edge> edges, Vertex n) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (u == v) continue;
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<Offset> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : canon) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  // Walking canonical (min,max) pairs in lexicographic order appends every
  // vertex's lower neighbors before its higher ones, each group ascending,
  // so the per-vertex lists come out sorted without a second pass.
  std::vector<Vertex> neighbors(offsets[n]);
  std::vector<Offset> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : canon) {
    neighbors[cursor[u]++] = v;
    neighbors[cursor[v]++] = u;
  }
  return Graph(n, std::move(offsets), std::move(neighbors));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  const Vertex n = g.n();
  if (n == 0) return stats;

  double sum_sq = 0.0;
  Offset isolated = 0;
  for (Vertex v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    sum_sq += d * d;
    if (d == 0.0) ++isolated;
  }
  stats.avg_degree = 2.0 * static_cast<double>(g.m()) / n;
  stats.max_degree = g.max_degree();
  stats.variance =
      std::max(0.0, sum_sq / n - stats.avg_degree * stats.avg_degree);
  stats.isolated_pct = 100.0 * static_cast<double>(isolated) / n;
  return stats;
}

double local_clustering(const Graph& g, Vertex v) {
  const Offset d = g.degree(v);
  if (d < 2) return 0.0;

  // Twice the number of edges among adj(v): every such edge (w,x) is seen
  // from both endpoints in the sorted intersections below.
  const auto adj_v = g.neighbors(v);
  std::uint64_t twice_edges = 0;
  for (Vertex w : adj_v) {
    const auto adj_w = g.neighbors(w);
    auto it_v = adj_v.begin();
    auto it_w = adj_w.begin();
    while (it_v != adj_v.end() && it_w != adj_w.end()) {
      if (*it_v < *it_w) {
        ++it_v;
      } else if (*it_w < *it_v) {
        ++it_w;
      } else {
        ++twice_edges;
        ++it_v;
        ++it_w;
      }
    }
  }
  const double possible = 0.5 * static_cast<double>(d) *
                          static_cast<double>(d - 1);
  return static_cast<double>(twice_edges / 2) / possible;
}

double average_clustering(const Graph& g) {
  if (g.n() == 0) {
    throw std::invalid_argument("average clustering undefined for n=0");
  }
  double sum = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) sum += local_clustering(g, v);
  return sum / g.n();
}

namespace {

std::size_t histogram_bucket(double c) {
  if (c <= 0.0) return 0;
  const auto idx =
      static_cast<std::size_t>(std::ceil(c * 10.0 - 1e-9));
  return std::min<std::size_t>(std::max<std::size_t>(idx, 1), 10);
}

}  // namespace

ClusteringReport clustering_report(const Graph& g) {
  ClusteringReport report;
  report.per_vertex.resize(g.n());
  double sum = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const double c = local_clustering(g, v);
    report.per_vertex[v] = c;
    sum += c;
    ++report.histogram[histogram_bucket(c)];
  }
  report.average = g.n() > 0 ? sum / g.n() : 0.0;
  return report;
}

std::vector<Vertex> random_permutation(Vertex n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  const CounterRng rng{seed};
  for (Vertex i = n; i > 1; --i) {
    const auto j = static_cast<Vertex>(rng.bounded(i, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

Graph shuffle_labels(const Graph& g, std::uint64_t seed) {
  const auto perm = random_permutation(g.n(), seed);
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v) edges.emplace_back(perm[v], perm[w]);
    }
  }
  return build_graph(edges, g.n());
}

}  // namespace graphcolor
