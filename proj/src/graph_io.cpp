#include "graphcolor/graph_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace graphcolor {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'B', 'G', '1'};

void append_u64_le(std::string& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
  }
}

std::uint64_t load_u64_le(const char* p) {
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) {
    x |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i]))
         << (8 * i);
  }
  return x;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

// Checks the full CSR contract: monotone offsets, in-range sorted
// duplicate-free neighbor lists, no self-loops, symmetric adjacency.
void validate_csr(Vertex n, const std::vector<Offset>& offsets,
                  const std::vector<Vertex>& neighbors) {
  if (offsets.size() != static_cast<std::size_t>(n) + 1 || offsets[0] != 0 ||
      offsets[n] != neighbors.size()) {
    throw FormatError("inconsistent CSR offsets");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1]) {
      throw FormatError("offsets not nondecreasing at vertex " +
                        std::to_string(v));
    }
    Vertex prev = 0;
    bool first = true;
    for (Offset k = offsets[v]; k < offsets[v + 1]; ++k) {
      const Vertex w = neighbors[k];
      if (w >= n) throw FormatError("neighbor id out of range");
      if (w == v) throw FormatError("self-loop at vertex " + std::to_string(v));
      if (!first && w <= prev) {
        throw FormatError("neighbor list of vertex " + std::to_string(v) +
                          " not sorted/unique");
      }
      prev = w;
      first = false;
    }
  }
  Graph probe(n, offsets, neighbors);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : probe.neighbors(v)) {
      if (w > v && !probe.has_edge(w, v)) {
        throw FormatError("adjacency not symmetric at edge (" +
                          std::to_string(v) + "," + std::to_string(w) + ")");
      }
    }
  }
}

Graph read_binary_stream(std::istream& in, const std::string& path) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kMagic) {
    throw FormatError("bad magic in " + path + ": not a CBG1 file");
  }
  std::array<char, 16> header{};
  in.read(header.data(), header.size());
  if (in.gcount() != 16) throw FormatError("truncated header in " + path);
  const std::uint64_t n = load_u64_le(header.data());
  const std::uint64_t m = load_u64_le(header.data() + 8);
  if (n > 0xffffffffull || m > (n * (n > 0 ? n - 1 : 0)) / 2) {
    throw FormatError("implausible n/m in " + path);
  }

  std::vector<char> buf((n + 1) * 8);
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
    throw FormatError("truncated offsets in " + path);
  }
  std::vector<Offset> offsets(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    offsets[i] = load_u64_le(buf.data() + 8 * i);
  }

  buf.resize(2 * m * 8);
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
    throw FormatError("truncated neighbors in " + path);
  }
  std::vector<Vertex> neighbors(2 * m);
  for (std::size_t i = 0; i < 2 * m; ++i) {
    const std::uint64_t w = load_u64_le(buf.data() + 8 * i);
    if (w >= n) throw FormatError("neighbor id out of range in " + path);
    neighbors[i] = static_cast<Vertex>(w);
  }

  validate_csr(static_cast<Vertex>(n), offsets, neighbors);
  return Graph(static_cast<Vertex>(n), std::move(offsets),
               std::move(neighbors));
}

}  // namespace

EdgeList read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw ParseError(path + ":1: missing header line", 1);
  }
  ++line_no;
  std::uint64_t n = 0, m = 0;
  {
    std::istringstream iss(line);
    std::string extra;
    if (!(iss >> n >> m) || (iss >> extra)) {
      throw ParseError(path + ":1: expected header \"n m\"", 1);
    }
    if (n > 0xffffffffull) {
      throw ParseError(path + ":1: vertex count too large", 1);
    }
  }

  EdgeList result;
  result.n = static_cast<Vertex>(n);
  result.edges.reserve(m);
  while (result.edges.size() < m) {
    if (!std::getline(in, line)) {
      throw ParseError(path + ": unexpected end of file at line " +
                           std::to_string(line_no + 1) + " (expected " +
                           std::to_string(m) + " edges)",
                       line_no + 1);
    }
    ++line_no;
    if (blank(line)) continue;
    std::istringstream iss(line);
    std::uint64_t u = 0, v = 0;
    std::string extra;
    if (!(iss >> u >> v) || (iss >> extra)) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                           ": expected edge \"u v\"",
                       line_no);
    }
    if (u >= n || v >= n) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": endpoint (" +
                           std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n),
                       line_no);
    }
    result.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                           ": trailing content after " + std::to_string(m) +
                           " edges",
                       line_no);
    }
  }
  return result;
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << g.n() << ' ' << g.m() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v) out << v << ' ' << w << '\n';
    }
  }
  if (!out) throw IoError("write failed for " + path);
}

Graph read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_binary_stream(in, path);
}

void write_binary(const Graph& g, const std::string& path) {
  std::string payload;
  payload.reserve(4 + 16 + (g.n() + 1ull + 2 * g.m()) * 8);
  payload.append(kMagic.data(), kMagic.size());
  append_u64_le(payload, g.n());
  append_u64_le(payload, g.m());
  for (Offset off : g.offsets()) append_u64_le(payload, off);
  for (Vertex w : g.adjacency()) append_u64_le(payload, w);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw IoError("write failed for " + path);
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() == 4 && magic == kMagic) {
    in.seekg(0);
    return read_binary_stream(in, path);
  }
  in.close();
  auto [edges, n] = read_edge_list(path);
  return build_graph(edges, n);
}

void write_graph(const Graph& g, const std::string& path) {
  const bool text = path.ends_with(".txt") || path.ends_with(".el");
  if (text) {
    write_edge_list(g, path);
  } else {
    write_binary(g, path);
  }
}

}  // namespace graphcolor
