#include <iostream>
#include <new>

#include <CLI11.hpp>

#include "graphcolor/cli.hpp"

namespace cli = graphcolor::cli;

int main(int argc, char** argv) {
  CLI::App app{"graphcolor: multithreaded distance-1 graph coloring toolkit"};
  app.require_subcommand(1);

  cli::GenerateOptions gen;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a label-shuffled R-MAT graph and write it out");
  generate->add_option("--preset", gen.preset, "er, g, or b")->required();
  generate->add_option("--scale", gen.scale, "n = 2^scale vertices")
      ->required();
  generate->add_option("--edge-factor", gen.edge_factor,
                       "candidate edges per vertex (default 8)");
  generate->add_option("--seed", gen.seed, "generator seed (default 1)");
  generate->add_option("--out", gen.out_path, "output graph path")->required();

  cli::ColorOptions col;
  CLI::App* color = app.add_subcommand(
      "color", "Color a graph, verify the result, and emit a JSON record");
  color->add_option("--graph", col.graph_path, "input graph path")->required();
  color
      ->add_option("--algorithm", col.algorithm,
                   "serial, iterative, or dataflow")
      ->required();
  color->add_option("--workers", col.workers, "worker count (default 1)");
  color->add_option("--record-out", col.record_path,
                    "also write the JSON record to this file");
  color->add_option("--coloring-out", col.coloring_path,
                    "write the coloring, one color per line");

  cli::BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Sweep algorithms and worker counts; emit a CSV table");
  bench_cmd->add_option("--graph", bench.graph_path, "input graph path")
      ->required();
  bench_cmd
      ->add_option("--algorithms", bench.algorithms,
                   "subset of serial,iterative,dataflow")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--workers", bench.worker_counts, "worker counts")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench.repetitions,
                        "repetitions per cell (default 3)");
  bench_cmd->add_option("--out", bench.csv_path,
                        "CSV output path (stdout when omitted)");

  cli::StatsOptions stats;
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "Print degree and clustering statistics for a graph");
  stats_cmd->add_option("--graph", stats.graph_path, "input graph path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (generate->parsed()) return cli::cmd_generate(gen, std::cout, std::cerr);
    if (color->parsed()) return cli::cmd_color(col, std::cout, std::cerr);
    if (bench_cmd->parsed()) return cli::cmd_bench(bench, std::cout, std::cerr);
    if (stats_cmd->parsed()) return cli::cmd_stats(stats, std::cout, std::cerr);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return cli::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitIo;
  }
  return cli::kExitUsage;
}
