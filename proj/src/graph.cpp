#include "polyjoin/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyjoin {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

void Graph::check_pair(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : row_words(v)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::row_mask(std::size_t v) const {
  if (n_ > 64) throw std::logic_error("row_mask requires at most 64 vertices");
  return bits_[v];
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph graph_union(const Graph& g, const Graph& h) {
  Graph out(g.n() + h.n());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.n(), v + g.n());
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = graph_union(g, h);
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (std::size_t v = 0; v < h.n(); ++v) out.add_edge(u, g.n() + v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      const auto row = g.row_words(v);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          bits &= bits - 1;
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace polyjoin
