#include "graphcolor/rmat.hpp"

#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "graphcolor/rng.hpp"
#include "oracles.hpp"

using namespace graphcolor;

TEST_CASE("presets carry the published quadrant probabilities") {
  const RmatParams er = preset_params(RmatPreset::ER, 10, 8, 1);
  CHECK(er.a == 0.25);
  CHECK(er.b == 0.25);
  CHECK(er.c == 0.25);
  CHECK(er.d == 0.25);

  const RmatParams g = preset_params(RmatPreset::G, 10, 8, 1);
  CHECK(g.a == 0.45);
  CHECK(g.b == 0.15);
  CHECK(g.c == 0.15);
  CHECK(g.d == 0.25);

  const RmatParams b = preset_params(RmatPreset::B, 10, 8, 1);
  CHECK(b.a == 0.55);
  CHECK(b.b == 0.15);
  CHECK(b.c == 0.15);
  CHECK(b.d == 0.15);
}

TEST_CASE("preset parsing") {
  CHECK(parse_preset("er") == RmatPreset::ER);
  CHECK(parse_preset("ER") == RmatPreset::ER);
  CHECK(parse_preset("g") == RmatPreset::G);
  CHECK(parse_preset("B") == RmatPreset::B);
  CHECK_THROWS_AS(parse_preset("x"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  RmatParams p = preset_params(RmatPreset::ER, 10, 8, 1);
  CHECK_NOTHROW(validate(p));

  SUBCASE("negative probability") {
    p.a = -0.1;
    p.d = 0.6;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
  }
  SUBCASE("probabilities must sum to one") {
    p.a = 0.5;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
  }
  SUBCASE("scale bounds") {
    p.scale = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
  }
  SUBCASE("edge factor bounds") {
    p.edge_factor = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
  }
}

TEST_CASE("sample_edge accumulates quadrant bits high to low") {
  SUBCASE("single subdivision, top-left quadrant") {
    RmatParams p = preset_params(RmatPreset::ER, 1, 8, 1);
    const std::vector<double> variates = {0.1};
    CHECK(sample_edge(p, variates) == Edge{0, 0});
  }
  SUBCASE("bottom-right then top-right") {
    RmatParams p = preset_params(RmatPreset::ER, 2, 8, 1);
    // 0.9 -> (2,2) sets the high bits (1,1); 0.3 -> (1,2) sets low bits
    // (0,1): row 0b10 = 2, col 0b11 = 3.
    const std::vector<double> variates = {0.9, 0.3};
    CHECK(sample_edge(p, variates) == Edge{2, 3});
  }
  SUBCASE("three-level hand trace with G probabilities") {
    RmatParams p = preset_params(RmatPreset::G, 3, 8, 1);
    // Thresholds: a=0.45, a+b=0.60, a+b+c=0.75.
    // 0.50 -> (1,2): row 0, col 1
    // 0.70 -> (2,1): row 1, col 0
    // 0.80 -> (2,2): row 1, col 1
    // row = 0b011 = 3, col = 0b101 = 5.
    const std::vector<double> variates = {0.50, 0.70, 0.80};
    CHECK(sample_edge(p, variates) == Edge{3, 5});
  }
}

TEST_CASE("rmat_generate is deterministic") {
  const RmatParams p = preset_params(RmatPreset::ER, 10, 8, 12345);
  CHECK(rmat_generate(p) == rmat_generate(p));
}

TEST_CASE("rmat_generate at the minimum scale") {
  const Graph g = rmat_generate(preset_params(RmatPreset::ER, 1, 4, 9));
  CHECK(g.n() == 2);
  CHECK(g.m() <= 1);  // only (0,1) can survive canonicalization
}

TEST_CASE("dedup loss at scale 16 is under 5% for the ER preset") {
  const RmatParams p = preset_params(RmatPreset::ER, 16, 8, 1);
  const Graph g = rmat_generate(p);
  const double requested = 8.0 * 65536.0;
  CHECK(static_cast<double>(g.m()) >= 0.95 * requested);
  CHECK(static_cast<double>(g.m()) <= requested);
}

TEST_CASE("generated graphs satisfy the CSR contract") {
  for (RmatPreset preset : {RmatPreset::ER, RmatPreset::G, RmatPreset::B}) {
    const Graph g = rmat_generate(preset_params(preset, 10, 8, 99));
    CHECK(g.n() == 1024);
    Offset degree_sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      degree_sum += g.degree(v);
      const auto adj = g.neighbors(v);
      for (std::size_t k = 0; k < adj.size(); ++k) {
        CHECK(adj[k] != v);
        if (k > 0) CHECK(adj[k - 1] < adj[k]);
      }
    }
    CHECK(degree_sum == 2 * g.m());
  }
}

TEST_CASE("structural ordering across presets at scale 14") {
  const DegreeStats er = degree_stats(rmat_generate(
      preset_params(RmatPreset::ER, 14, 8, 5)));
  const DegreeStats g = degree_stats(rmat_generate(
      preset_params(RmatPreset::G, 14, 8, 5)));
  const DegreeStats b = degree_stats(rmat_generate(
      preset_params(RmatPreset::B, 14, 8, 5)));

  CHECK(b.max_degree > g.max_degree);
  CHECK(g.max_degree > er.max_degree);
  CHECK(b.variance > g.variance);
  CHECK(g.variance > er.variance);
  CHECK(b.isolated_pct > g.isolated_pct);
}

TEST_CASE("mean degree tracks the requested edge factor") {
  // 2m/n equals 2 * edge_factor * (1 - dedup loss); the loss itself stays
  // small for ER/G at this scale.
  for (RmatPreset preset : {RmatPreset::ER, RmatPreset::G, RmatPreset::B}) {
    const RmatParams p = preset_params(preset, 14, 8, 3);
    const Graph g = rmat_generate(p);
    const double loss =
        1.0 - static_cast<double>(g.m()) /
                  (static_cast<double>(p.edge_factor) * g.n());
    const double mean = 2.0 * static_cast<double>(g.m()) / g.n();
    CHECK(mean ==
          doctest::Approx(2.0 * p.edge_factor * (1.0 - loss)).epsilon(1e-12));
    CHECK(mean > 0.9 * 2.0 * p.edge_factor);
    CHECK(loss < 0.1);
  }
}
