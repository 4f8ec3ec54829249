#pragma once

#include "polyjoin/graph.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polyjoin {

/// Malformed graph file. line() is 1-based, 0 when the problem is global.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the edge-list format: first line `n m`, then m lines `u v` with
/// 0-based vertex ids. Self-loops and duplicate edges are rejected.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);

}  // namespace polyjoin
