#include "graphcolor/graph_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "oracles.hpp"

using namespace graphcolor;
namespace oracle = testing_oracles;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("graphcolor_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("text edge list round-trips") {
  TempDir dir;
  const Graph k3 = oracle::clique_graph(3);
  const std::string path = dir.file("k3.txt");
  write_edge_list(k3, path);
  const EdgeList parsed = read_edge_list(path);
  CHECK(build_graph(parsed.edges, parsed.n) == k3);
}

TEST_CASE("text parsing accepts the documented format") {
  TempDir dir;
  const std::string path = dir.file("simple.txt");
  write_text(path, "3 1\n0 1\n");
  const EdgeList parsed = read_edge_list(path);
  CHECK(parsed.n == 3);
  REQUIRE(parsed.edges.size() == 1);
  CHECK(parsed.edges[0] == Edge{0, 1});
}

TEST_CASE("text parse errors carry line numbers") {
  TempDir dir;
  SUBCASE("out-of-range endpoint") {
    const std::string path = dir.file("bad_range.txt");
    write_text(path, "3 1\n0 9\n");
    try {
      read_edge_list(path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("malformed edge line") {
    const std::string path = dir.file("bad_tokens.txt");
    write_text(path, "3 1\nx y\n");
    try {
      read_edge_list(path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("truncated edge section") {
    const std::string path = dir.file("truncated.txt");
    write_text(path, "4 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(path), ParseError);
  }
  SUBCASE("trailing garbage") {
    const std::string path = dir.file("trailing.txt");
    write_text(path, "3 1\n0 1\n0 2\n");
    CHECK_THROWS_AS(read_edge_list(path), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_edge_list(dir.file("nope.txt")), IoError);
  }
}

TEST_CASE("binary format round-trips") {
  TempDir dir;
  for (std::uint32_t seed = 0; seed < 5; ++seed) {
    const Graph g = oracle::gnp_graph(80 + seed * 13, 0.1, seed);
    const std::string path = dir.file("g.cbg");
    write_binary(g, path);
    CHECK(read_binary(path) == g);
  }
}

TEST_CASE("binary layout is bit-exact") {
  TempDir dir;
  const Graph k3 = oracle::clique_graph(3);
  const std::string path = dir.file("k3.cbg");
  write_binary(k3, path);

  std::string expected = "CBG1";
  auto push_u64 = [&expected](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      expected.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
    }
  };
  push_u64(3);  // n
  push_u64(3);  // m
  for (std::uint64_t off : {0, 2, 4, 6}) push_u64(off);
  for (std::uint64_t w : {1, 2, 0, 2, 0, 1}) push_u64(w);
  CHECK(read_bytes(path) == expected);
}

TEST_CASE("binary reader rejects corrupt files") {
  TempDir dir;
  SUBCASE("bad magic") {
    const std::string path = dir.file("bad.cbg");
    write_text(path, "NOPE not a graph");
    CHECK_THROWS_AS(read_binary(path), FormatError);
  }
  SUBCASE("truncated payload") {
    const std::string path = dir.file("trunc.cbg");
    write_binary(oracle::clique_graph(4), path);
    std::string bytes = read_bytes(path);
    bytes.resize(bytes.size() / 2);
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    out.close();
    CHECK_THROWS_AS(read_binary(path), FormatError);
  }
}

TEST_CASE("read_graph sniffs the format") {
  TempDir dir;
  const Graph g = oracle::cycle_graph(9);

  const std::string bin = dir.file("g.cbg");
  write_graph(g, bin);
  CHECK(read_graph(bin) == g);

  const std::string txt = dir.file("g.txt");
  write_graph(g, txt);
  CHECK(read_graph(txt) == g);

  // write_graph picked the right format for each extension
  CHECK(read_bytes(bin).substr(0, 4) == "CBG1");
  CHECK(read_bytes(txt).substr(0, 4) != "CBG1");
}

TEST_CASE("empty graph files round-trip") {
  TempDir dir;
  const Graph empty = build_graph({}, 0);
  const std::string path = dir.file("empty.txt");
  write_graph(empty, path);
  CHECK(read_graph(path).n() == 0);
}
