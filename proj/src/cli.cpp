#include "graphcolor/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "graphcolor/dataflow.hpp"
#include "graphcolor/graph_io.hpp"
#include "graphcolor/iterative.hpp"
#include "graphcolor/rmat.hpp"
#include "graphcolor/rng.hpp"

namespace graphcolor::cli {

namespace {

using nlohmann::json;

double time_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void print_degree_stats(std::ostream& out, const Graph& g) {
  const DegreeStats stats = degree_stats(g);
  out << "vertices:     " << g.n() << '\n'
      << "edges:        " << g.m() << '\n'
      << "avg degree:   " << stats.avg_degree << '\n'
      << "max degree:   " << stats.max_degree << '\n'
      << "variance:     " << stats.variance << '\n'
      << "isolated:     " << stats.isolated_pct << "%\n";
}

void write_coloring_file(const Coloring& colors, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (Color c : colors) out << c << '\n';
  if (!out) throw IoError("write failed for " + path);
}

// Median as the middle element of the sorted values (upper middle for even
// counts), so integer columns stay integral.
template <class T>
T mid_of_sorted(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

struct CsvRow {
  std::string graph;
  std::string algorithm;
  unsigned workers = 1;
  std::string rep;
  double seconds = 0.0;
  Color colors = 0;
  std::optional<std::size_t> rounds;
  std::optional<std::uint64_t> conflicts;
  bool valid = false;
};

void write_csv_row(std::ostream& out, const CsvRow& row) {
  out << row.graph << ',' << row.algorithm << ',' << row.workers << ','
      << row.rep << ',' << std::setprecision(9) << row.seconds << ','
      << row.colors << ',';
  if (row.rounds) out << *row.rounds;
  out << ',';
  if (row.conflicts) out << *row.conflicts;
  out << ',' << (row.valid ? "true" : "false") << '\n';
}

}  // namespace

std::string RunRecord::to_json() const {
  json j;
  j["graph"] = graph;
  j["n"] = n;
  j["m"] = m;
  j["algorithm"] = algorithm;
  j["workers"] = workers;
  j["wall_time_seconds"] = wall_time_seconds;
  j["colors_used"] = colors_used;
  if (rounds) j["rounds"] = *rounds;
  if (total_conflicts) j["total_conflicts"] = *total_conflicts;
  if (max_chain) j["max_chain"] = *max_chain;
  if (!round_stats.empty()) {
    json rows = json::array();
    for (const RoundStats& r : round_stats) {
      rows.push_back({{"round", r.round},
                      {"pending", r.pending},
                      {"conflicts", r.conflicts},
                      {"tentative_seconds", r.tentative_seconds},
                      {"detect_seconds", r.detect_seconds}});
    }
    j["round_stats"] = rows;
  }
  j["valid"] = valid;
  return j.dump(2);
}

RunRecord run_algorithm(const Graph& g, const std::string& graph_label,
                        const std::string& algorithm, unsigned workers) {
  RunRecord record;
  record.graph = graph_label;
  record.n = g.n();
  record.m = g.m();
  record.algorithm = algorithm;
  record.workers = workers;

  Coloring colors;
  if (algorithm == "serial") {
    record.workers = 1;
    const auto start = std::chrono::steady_clock::now();
    colors = greedy_color(g);
    record.wall_time_seconds = time_seconds(start);
  } else if (algorithm == "iterative") {
    SchedulePolicy policy;
    policy.workers = workers;
    const auto start = std::chrono::steady_clock::now();
    IterativeResult result = iterative_color(g, policy);
    record.wall_time_seconds = time_seconds(start);
    colors = std::move(result.colors);
    record.rounds = result.rounds.size();
    std::uint64_t conflicts = 0;
    for (const RoundStats& r : result.rounds) conflicts += r.conflicts;
    record.total_conflicts = conflicts;
    record.round_stats = std::move(result.rounds);
  } else if (algorithm == "dataflow") {
    DataflowOptions options;
    options.workers = workers;
    DataflowMetrics metrics;
    const auto start = std::chrono::steady_clock::now();
    colors = dataflow_color(g, options, &metrics);
    record.wall_time_seconds = time_seconds(start);
    record.max_chain = metrics.max_chain;
  } else {
    throw std::invalid_argument("unknown algorithm \"" + algorithm +
                                "\" (expected serial, iterative, or dataflow)");
  }

  record.valid = verify_coloring(g, colors).ok();
  record.colors_used = g.n() == 0 ? 0 : num_colors(colors);
  record.coloring = std::move(colors);
  return record;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out,
                 std::ostream& err) {
  RmatPreset preset;
  try {
    preset = parse_preset(opt.preset);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const RmatParams params =
        preset_params(preset, opt.scale, opt.edge_factor, opt.seed);
    validate(params);
    Graph g = rmat_generate(params);
    // Vertex labels are shuffled so generation artifacts (high-degree
    // vertices at low indices) do not leak into coloring order.
    g = shuffle_labels(g, mix64(opt.seed ^ 0x9e3779b97f4a7c15ull));
    write_graph(g, opt.out_path);
    out << "wrote " << opt.out_path << '\n';
    print_degree_stats(out, g);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

int cmd_color(const ColorOptions& opt, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph(opt.graph_path);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  RunRecord record;
  try {
    record = run_algorithm(g, opt.graph_path, opt.algorithm, opt.workers);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const std::string json_text = record.to_json();
    out << json_text << '\n';
    if (!opt.record_path.empty()) {
      std::ofstream f(opt.record_path);
      if (!f) throw IoError("cannot open " + opt.record_path);
      f << json_text << '\n';
    }
    if (!opt.coloring_path.empty()) {
      write_coloring_file(record.coloring, opt.coloring_path);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  if (!record.valid) {
    err << "error: coloring failed verification\n";
    return kExitInvalidColoring;
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.algorithms.empty() || opt.worker_counts.empty() ||
      opt.repetitions < 1) {
    err << "error: bench needs at least one algorithm, one worker count, "
           "and one repetition\n";
    return kExitUsage;
  }
  for (const std::string& a : opt.algorithms) {
    if (a != "serial" && a != "iterative" && a != "dataflow") {
      err << "error: unknown algorithm \"" << a << "\"\n";
      return kExitUsage;
    }
  }

  Graph g;
  try {
    g = read_graph(opt.graph_path);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  std::ostringstream csv;
  csv << "graph,algorithm,workers,rep,seconds,colors,rounds,conflicts,valid\n";
  bool all_valid = true;

  for (const std::string& algorithm : opt.algorithms) {
    // Serial ignores the worker sweep: one cell at workers = 1.
    std::vector<unsigned> counts =
        algorithm == "serial" ? std::vector<unsigned>{1} : opt.worker_counts;
    for (unsigned workers : counts) {
      std::vector<CsvRow> rows;
      for (unsigned rep = 1; rep <= opt.repetitions; ++rep) {
        const RunRecord record =
            run_algorithm(g, opt.graph_path, algorithm, workers);
        all_valid = all_valid && record.valid;
        CsvRow row;
        row.graph = opt.graph_path;
        row.algorithm = algorithm;
        row.workers = record.workers;
        row.rep = std::to_string(rep);
        row.seconds = record.wall_time_seconds;
        row.colors = record.colors_used;
        row.rounds = record.rounds;
        row.conflicts = record.total_conflicts;
        row.valid = record.valid;
        rows.push_back(row);
        write_csv_row(csv, row);
      }
      CsvRow median = rows.front();
      median.rep = "median";
      {
        std::vector<double> seconds;
        std::vector<Color> colors;
        for (const CsvRow& r : rows) {
          seconds.push_back(r.seconds);
          colors.push_back(r.colors);
        }
        median.seconds = mid_of_sorted(seconds);
        median.colors = mid_of_sorted(colors);
        if (rows.front().rounds) {
          std::vector<std::size_t> rounds;
          std::vector<std::uint64_t> conflicts;
          for (const CsvRow& r : rows) {
            rounds.push_back(*r.rounds);
            conflicts.push_back(*r.conflicts);
          }
          median.rounds = mid_of_sorted(rounds);
          median.conflicts = mid_of_sorted(conflicts);
        }
        median.valid = std::all_of(rows.begin(), rows.end(),
                                   [](const CsvRow& r) { return r.valid; });
      }
      write_csv_row(csv, median);
    }
  }

  try {
    if (opt.csv_path.empty()) {
      out << csv.str();
    } else {
      std::ofstream f(opt.csv_path);
      if (!f) throw IoError("cannot open " + opt.csv_path);
      f << csv.str();
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return all_valid ? kExitOk : kExitInvalidColoring;
}

int cmd_stats(const StatsOptions& opt, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph(opt.graph_path);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  print_degree_stats(out, g);
  if (g.n() == 0) {
    out << "avg clustering: 0\n";
    return kExitOk;
  }
  const ClusteringReport report = clustering_report(g);
  out << "avg clustering: " << report.average << '\n';
  out << "clustering histogram:\n";
  out << "  =0.0       " << report.histogram[0] << '\n';
  for (int i = 1; i <= 10; ++i) {
    out << "  (" << std::fixed << std::setprecision(1) << (i - 1) / 10.0
        << "," << i / 10.0 << "] " << report.histogram[i] << '\n';
    out.unsetf(std::ios_base::fixed);
  }
  return kExitOk;
}

}  // namespace graphcolor::cli
