#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphcolor {

using Vertex = std::uint32_t;
using Offset = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable undirected graph in compressed sparse row form. Each undirected
// edge is stored in both endpoints' neighbor lists; lists are sorted
// ascending and duplicate-free, and there are no self-loops. Safe to share
// across threads once constructed.
class Graph {
 public:
  Graph() = default;
  // Adopts prebuilt CSR arrays. offsets.size() must be n+1 and
  // neighbors.size() must equal offsets[n] (= 2m).
  Graph(Vertex n, std::vector<Offset> offsets, std::vector<Vertex> neighbors);

  Vertex n() const { return n_; }
  Offset m() const { return neighbors_.size() / 2; }

  Offset degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  Vertex max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }

  // Binary search in u's sorted neighbor list.
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Offset> offsets() const { return offsets_; }
  std::span<const Vertex> adjacency() const { return neighbors_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  Vertex max_degree_ = 0;
  std::vector<Offset> offsets_{0};
  std::vector<Vertex> neighbors_;
};

// Builds a Graph from an arbitrary edge sequence: self-loops are dropped,
// (u,v)/(v,u) and repeated pairs collapse into a single undirected edge.
// Throws std::invalid_argument naming the offending pair if an endpoint
// is outside [0, n).
Graph build_graph(std::span<const Edge> edges, Vertex n);

struct DegreeStats {
  double avg_degree = 0.0;  // 2m/n
  Vertex max_degree = 0;
  double variance = 0.0;  // population variance of the degree sequence
  double isolated_pct = 0.0;  // percentage of degree-0 vertices
};

// All-zero stats for the empty graph (n = 0).
DegreeStats degree_stats(const Graph& g);

// Fraction of v's neighbor pairs that are themselves adjacent; 0 when
// deg(v) < 2.
double local_clustering(const Graph& g, Vertex v);

// Mean of local_clustering over all vertices. Throws std::invalid_argument
// when n = 0.
double average_clustering(const Graph& g);

struct ClusteringReport {
  std::vector<double> per_vertex;
  double average = 0.0;
  // Bucket 0 counts exact zeros; bucket i (1..10) counts values in
  // ((i-1)/10, i/10].
  std::array<std::uint64_t, 11> histogram{};
};

ClusteringReport clustering_report(const Graph& g);

// Deterministic uniform permutation of [0, n) (Fisher-Yates over a
// counter-based generator).
std::vector<Vertex> random_permutation(Vertex n, std::uint64_t seed);

// Relabels vertices by a seeded random permutation. The result is isomorphic
// to the input; the same seed always yields the same graph.
Graph shuffle_labels(const Graph& g, std::uint64_t seed);

}  // namespace graphcolor
