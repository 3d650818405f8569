#include "graphcolor/iterative.hpp"

#include <numeric>
#include <stdexcept>

#include <doctest.h>

#include "graphcolor/rmat.hpp"
#include "oracles.hpp"

using namespace graphcolor;
namespace oracle = testing_oracles;

TEST_CASE("one worker reproduces serial greedy exactly") {
  SchedulePolicy policy;
  policy.workers = 1;

  const Graph graphs[] = {
      oracle::path_graph(7), oracle::cycle_graph(9), oracle::clique_graph(6),
      oracle::gnp_graph(200, 0.05, 3),
      rmat_generate(preset_params(RmatPreset::G, 12, 8, 4))};
  for (const Graph& g : graphs) {
    const IterativeResult result = iterative_color(g, policy);
    CHECK(result.colors == greedy_color(g));
    REQUIRE(result.rounds.size() == 1);
    CHECK(result.rounds[0].conflicts == 0);
  }
}

TEST_CASE("detect_conflicts keeps only higher-index endpoints") {
  SchedulePolicy policy;

  SUBCASE("clean path") {
    const Graph g = oracle::path_graph(3);
    const Coloring colors = {1, 2, 1};
    CHECK(detect_conflicts(g, natural_order(3), colors, policy).empty());
  }
  SUBCASE("conflicted K2 recolors vertex 1") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}}, 2);
    const Coloring colors = {1, 1};
    const auto recolor = detect_conflicts(g, natural_order(2), colors, policy);
    CHECK(recolor == std::vector<Vertex>{1});
  }
  SUBCASE("monochromatic triangle flags both higher endpoints") {
    const Graph g = oracle::clique_graph(3);
    const Coloring colors = {1, 1, 1};
    const auto recolor = detect_conflicts(g, natural_order(3), colors, policy);
    CHECK(recolor == std::vector<Vertex>{1, 2});
  }
  SUBCASE("only pending vertices can enter the recolor set") {
    const Graph g = oracle::clique_graph(3);
    const Coloring colors = {1, 1, 1};
    const std::vector<Vertex> pending = {1};
    CHECK(detect_conflicts(g, pending, colors, policy) ==
          std::vector<Vertex>{1});
  }
}

TEST_CASE("tentative_round colors the pending set") {
  SchedulePolicy policy;

  SUBCASE("isolated vertex gets color 1") {
    const Graph g = build_graph({}, 1);
    Coloring colors(1, 0);
    tentative_round(g, natural_order(1), colors, policy);
    CHECK(colors == Coloring{1});
  }
  SUBCASE("single worker over P4 reduces to greedy") {
    const Graph g = oracle::path_graph(4);
    Coloring colors(4, 0);
    tentative_round(g, natural_order(4), colors, policy);
    CHECK(colors == Coloring{1, 2, 1, 2});
  }
  SUBCASE("speculative K2 conflict resolves through one more round") {
    // The state both-read-before-either-wrote: both endpoints tentatively
    // hold color 1. The next round recolors only vertex 1.
    const Graph g = build_graph(std::vector<Edge>{{0, 1}}, 2);
    Coloring colors = {1, 1};
    const auto recolor = detect_conflicts(g, natural_order(2), colors, policy);
    REQUIRE(recolor == std::vector<Vertex>{1});
    tentative_round(g, recolor, colors, policy);
    CHECK(colors == Coloring{1, 2});
    CHECK(detect_conflicts(g, recolor, colors, policy).empty());
  }
}

TEST_CASE("parallel runs always end valid") {
  for (unsigned workers : {2u, 4u, 8u}) {
    for (Chunking chunking : {Chunking::kStatic, Chunking::kDynamic}) {
      SchedulePolicy policy;
      policy.workers = workers;
      policy.chunking = chunking;
      policy.chunk_size = 64;
      for (std::uint32_t seed = 0; seed < 4; ++seed) {
        const Graph g = oracle::gnp_graph(400, 0.03, seed);
        const IterativeResult result = iterative_color(g, policy);
        CHECK(verify_coloring(g, result.colors).ok());
        CHECK(num_colors(result.colors) <= g.max_degree() + 1);
      }
    }
  }
}

TEST_CASE("round stats satisfy the shrink and accounting invariants") {
  SchedulePolicy policy;
  policy.workers = 8;
  const Graph g = rmat_generate(preset_params(RmatPreset::B, 13, 8, 21));
  const IterativeResult result = iterative_color(g, policy);

  REQUIRE(!result.rounds.empty());
  CHECK(result.rounds.front().pending == g.n());
  CHECK(result.rounds.back().conflicts == 0);

  std::uint64_t recolored = 0;
  for (std::size_t i = 0; i < result.rounds.size(); ++i) {
    const RoundStats& r = result.rounds[i];
    CHECK(r.round == i + 1);
    if (r.pending > 0) CHECK(r.conflicts < r.pending);
    if (i + 1 < result.rounds.size()) {
      CHECK(result.rounds[i + 1].pending == r.conflicts);
      recolored += result.rounds[i + 1].pending;
    }
  }
  std::uint64_t total_conflicts = 0;
  for (const RoundStats& r : result.rounds) total_conflicts += r.conflicts;
  CHECK(total_conflicts == recolored);
}

TEST_CASE("sequential cutoff forces greedy-equal results") {
  SchedulePolicy policy;
  policy.workers = 8;
  policy.sequential_cutoff = 1u << 20;  // larger than any test graph
  for (std::uint32_t seed = 0; seed < 3; ++seed) {
    const Graph g = oracle::gnp_graph(300, 0.05, seed);
    CHECK(iterative_color(g, policy).colors == greedy_color(g));
  }
}

TEST_CASE("repeated K2 races stay valid") {
  SchedulePolicy policy;
  policy.workers = 2;
  const Graph g = build_graph(std::vector<Edge>{{0, 1}}, 2);
  for (int run = 0; run < 100; ++run) {
    const IterativeResult result = iterative_color(g, policy);
    CHECK(verify_coloring(g, result.colors).ok());
    CHECK(num_colors(result.colors) == 2);
  }
}

TEST_CASE("policy validation") {
  SchedulePolicy policy;
  policy.workers = 0;
  CHECK_THROWS_AS(iterative_color(oracle::path_graph(3), policy),
                  std::invalid_argument);
  policy.workers = 2;
  policy.chunking = Chunking::kDynamic;
  policy.chunk_size = 0;
  CHECK_THROWS_AS(iterative_color(oracle::path_graph(3), policy),
                  std::invalid_argument);
}

TEST_CASE("empty graph colors trivially") {
  const IterativeResult result = iterative_color(build_graph({}, 0));
  CHECK(result.colors.empty());
  CHECK(result.rounds.empty());
}
