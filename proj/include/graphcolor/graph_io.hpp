#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graphcolor/graph.hpp"

namespace graphcolor {

// Base for all file I/O failures (open/read/write errors).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text edge list; carries the 1-based line number.
class ParseError : public IoError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : IoError(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Malformed binary file (bad magic, truncation, invariant violation).
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

struct EdgeList {
  std::vector<Edge> edges;
  Vertex n = 0;
};

// Text format: header line "n m", then m lines "u v" (0-based, unordered).
EdgeList read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, const std::string& path);

// Binary format: magic "CBG1", then little-endian 64-bit n, m,
// offsets[n+1], neighbors[2m]. Round-trips bit-exactly.
Graph read_binary(const std::string& path);
void write_binary(const Graph& g, const std::string& path);

// Sniffs the magic bytes: binary if present, text otherwise.
Graph read_graph(const std::string& path);
// Writes text for paths ending in .txt or .el, binary otherwise.
void write_graph(const Graph& g, const std::string& path);

}  // namespace graphcolor
