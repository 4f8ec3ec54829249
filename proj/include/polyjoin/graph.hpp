#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace polyjoin {

/// Simple undirected graph stored as symmetric adjacency bit rows.
/// Self-loops and parallel edges are not representable.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  std::size_t n() const { return n_; }
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Adds {u,v}. Throws std::invalid_argument for u == v or out-of-range ids.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Neighbourhood of v as a 64-bit mask. Requires n() <= 64.
  std::uint64_t row_mask(std::size_t v) const;

  std::span<const std::uint64_t> row_words(std::size_t v) const {
    return {bits_.data() + v * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_pair(std::size_t u, std::size_t v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

/// Disjoint union; vertices of h are shifted by g.n().
Graph graph_union(const Graph& g, const Graph& h);

/// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);

/// Subgraph induced on the listed vertices, relabelled 0..k-1 in list order.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

/// Vertex sets of the connected components, each sorted ascending.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

}  // namespace polyjoin
