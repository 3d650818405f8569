#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "graphcolor/graph.hpp"

namespace graphcolor {

enum class RmatPreset { ER, G, B };

struct RmatParams {
  // Quadrant probabilities; must be nonnegative and sum to 1 within 1e-9.
  double a = 0.25, b = 0.25, c = 0.25, d = 0.25;
  unsigned scale = 1;        // n = 2^scale vertices
  unsigned edge_factor = 8;  // edge_factor * n candidate edges
  std::uint64_t seed = 1;
};

// ER -> (0.25,0.25,0.25,0.25), G -> (0.45,0.15,0.15,0.25),
// B -> (0.55,0.15,0.15,0.15).
RmatParams preset_params(RmatPreset preset, unsigned scale,
                         unsigned edge_factor, std::uint64_t seed);

// Accepts "er", "g", "b" (case-insensitive); throws std::invalid_argument
// otherwise.
RmatPreset parse_preset(std::string_view name);
std::string_view preset_name(RmatPreset preset);

// Throws std::invalid_argument if the parameter invariants are violated.
void validate(const RmatParams& p);

// One recursive quadrant descent: consumes `scale` uniform variates, each
// selecting a quadrant with probabilities a/b/c/d, accumulating row and
// column bits high-to-low. Deterministic given the variates.
Edge sample_edge(const RmatParams& p, std::span<const double> variates);

// Draws edge_factor * 2^scale candidate edges from the seeded counter
// generator and builds the deduplicated undirected graph. Identical params
// and seed always produce an identical graph.
Graph rmat_generate(const RmatParams& p);

}  // namespace graphcolor
