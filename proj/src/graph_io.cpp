#include "polyjoin/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace polyjoin {

GraphParseError::GraphParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

// Reads the next non-blank line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

template <class... Ts>
bool parse_exact(const std::string& line, Ts&... out) {
  std::istringstream ss(line);
  if (!(ss >> ... >> out)) return false;
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw GraphParseError(0, "empty graph file");
  long long n = 0, m = 0;
  if (!parse_exact(line, n, m) || n < 0 || m < 0) {
    throw GraphParseError(lineno, "expected header `n m` with nonnegative integers");
  }
  Graph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line(in, line, lineno)) {
      throw GraphParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(e));
    }
    long long u = 0, v = 0;
    if (!parse_exact(line, u, v)) throw GraphParseError(lineno, "expected edge `u v`");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphParseError(lineno, "vertex index out of range");
    }
    if (u == v) throw GraphParseError(lineno, "self-loop");
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    if (g.has_edge(su, sv)) throw GraphParseError(lineno, "duplicate edge");
    g.add_edge(su, sv);
  }
  if (next_line(in, line, lineno)) throw GraphParseError(lineno, "trailing content after edges");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError(0, "cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace polyjoin
