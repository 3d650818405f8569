#include "graphcolor/rmat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "graphcolor/rng.hpp"

namespace graphcolor {

RmatParams preset_params(RmatPreset preset, unsigned scale,
                         unsigned edge_factor, std::uint64_t seed) {
  RmatParams p;
  switch (preset) {
    case RmatPreset::ER:
      p.a = 0.25; p.b = 0.25; p.c = 0.25; p.d = 0.25;
      break;
    case RmatPreset::G:
      p.a = 0.45; p.b = 0.15; p.c = 0.15; p.d = 0.25;
      break;
    case RmatPreset::B:
      p.a = 0.55; p.b = 0.15; p.c = 0.15; p.d = 0.15;
      break;
  }
  p.scale = scale;
  p.edge_factor = edge_factor;
  p.seed = seed;
  return p;
}

RmatPreset parse_preset(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) ch = static_cast<char>(std::tolower(ch));
  if (lower == "er") return RmatPreset::ER;
  if (lower == "g") return RmatPreset::G;
  if (lower == "b") return RmatPreset::B;
  throw std::invalid_argument("unknown preset \"" + std::string(name) +
                              "\" (expected er, g, or b)");
}

std::string_view preset_name(RmatPreset preset) {
  switch (preset) {
    case RmatPreset::ER: return "er";
    case RmatPreset::G: return "g";
    case RmatPreset::B: return "b";
  }
  return "?";
}

void validate(const RmatParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0) {
    throw std::invalid_argument("quadrant probabilities must be nonnegative");
  }
  if (std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-9) {
    throw std::invalid_argument("quadrant probabilities must sum to 1");
  }
  if (p.scale < 1 || p.scale > 30) {
    throw std::invalid_argument("scale must be in [1, 30]");
  }
  if (p.edge_factor < 1) {
    throw std::invalid_argument("edge factor must be >= 1");
  }
}

Edge sample_edge(const RmatParams& p, std::span<const double> variates) {
  Vertex row = 0;
  Vertex col = 0;
  for (unsigned level = 0; level < p.scale; ++level) {
    const double u = variates[level];
    row <<= 1;
    col <<= 1;
    if (u < p.a) {
      // top-left quadrant: both bits stay 0
    } else if (u < p.a + p.b) {
      col |= 1;  // top-right
    } else if (u < p.a + p.b + p.c) {
      row |= 1;  // bottom-left
    } else {
      row |= 1;  // bottom-right
      col |= 1;
    }
  }
  return {row, col};
}

Graph rmat_generate(const RmatParams& p) {
  validate(p);
  const Vertex n = Vertex{1} << p.scale;
  const std::uint64_t candidates =
      static_cast<std::uint64_t>(p.edge_factor) << p.scale;

  const CounterRng rng{p.seed};
  std::vector<Edge> edges;
  edges.reserve(candidates);
  std::vector<double> variates(p.scale);
  for (std::uint64_t i = 0; i < candidates; ++i) {
    const std::uint64_t base = i * p.scale;
    for (unsigned level = 0; level < p.scale; ++level) {
      variates[level] = rng.uniform(base + level);
    }
    edges.push_back(sample_edge(p, variates));
  }
  return build_graph(edges, n);
}

}  // namespace graphcolor
