#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphcolor/coloring.hpp"
#include "graphcolor/iterative.hpp"

namespace graphcolor::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidColoring = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct GenerateOptions {
  std::string preset;
  unsigned scale = 10;
  unsigned edge_factor = 8;
  std::uint64_t seed = 1;
  std::string out_path;
};

struct ColorOptions {
  std::string graph_path;
  std::string algorithm;  // serial | iterative | dataflow
  unsigned workers = 1;
  std::string record_path;    // optional JSON output file
  std::string coloring_path;  // optional coloring dump (one color per line)
};

struct BenchOptions {
  std::string graph_path;
  std::vector<std::string> algorithms;
  std::vector<unsigned> worker_counts;
  unsigned repetitions = 3;
  std::string csv_path;  // optional; stdout when empty
};

struct StatsOptions {
  std::string graph_path;
};

struct RunRecord {
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string algorithm;
  unsigned workers = 1;
  double wall_time_seconds = 0.0;
  Color colors_used = 0;
  std::optional<std::size_t> rounds;            // iterative only
  std::optional<std::uint64_t> total_conflicts;  // iterative only
  std::optional<std::size_t> max_chain;          // dataflow only
  std::vector<RoundStats> round_stats;           // iterative only
  bool valid = false;
  Coloring coloring;  // not serialized

  std::string to_json() const;
};

// Timed run of one algorithm; timing covers the coloring call only.
RunRecord run_algorithm(const Graph& g, const std::string& graph_label,
                        const std::string& algorithm, unsigned workers);

int cmd_generate(const GenerateOptions& opt, std::ostream& out,
                 std::ostream& err);
int cmd_color(const ColorOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace graphcolor::cli
