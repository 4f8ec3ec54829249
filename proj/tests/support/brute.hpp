#pragma once

// Naive enumerators used as independent ground truth in tests. They share no
// code with the library's subset DPs: permutations, set partitions and edge
// subsets are walked explicitly. Only meant for n <= 9 or so.

#include "polyjoin/graph.hpp"
#include "polyjoin/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace brute {

using polyjoin::BigInt;
using polyjoin::Graph;
using polyjoin::Poly;

inline std::uint64_t ham_paths(const Graph& g, const std::vector<std::size_t>& verts) {
  if (verts.empty()) return 0;
  std::vector<std::size_t> perm = verts;
  std::sort(perm.begin(), perm.end());
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::vector<std::size_t> all_vertices(const Graph& g) {
  std::vector<std::size_t> v(g.n());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline std::uint64_t ham_paths(const Graph& g) { return ham_paths(g, all_vertices(g)); }

// Cyclic sequences: fix vertex 0 first. n = 1 -> 1, n = 2 -> edge ? 1 : 0.
inline std::uint64_t ham_cycles(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (n == 2) return g.has_edge(0, 1) ? 1 : 0;
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size() && ok; ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    count += ok;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

// Every set partition of {0..n-1} via restricted growth strings.
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::vector<std::size_t>>&)>& fn) {
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> parts(blocks);
      for (std::size_t v = 0; v < n; ++v) parts[a[v]].push_back(v);
      fn(parts);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

inline Poly path_cover_poly(const Graph& g) {
  std::vector<BigInt> c(g.n() + 1);
  for_each_partition(g.n(), [&](const auto& parts) {
    BigInt w = 1;
    for (const auto& block : parts) w *= static_cast<unsigned long>(ham_paths(g, block));
    c[parts.size()] += w;
  });
  return Poly(std::move(c));
}

inline bool is_clique(const Graph& g, const std::vector<std::size_t>& block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (!g.has_edge(block[i], block[j])) return false;
    }
  }
  return true;
}

inline Poly clique_cover_poly(const Graph& g) {
  std::vector<BigInt> c(g.n() + 1);
  for_each_partition(g.n(), [&](const auto& parts) {
    if (std::all_of(parts.begin(), parts.end(), [&](const auto& b) { return is_clique(g, b); })) {
      c[parts.size()] += 1;
    }
  });
  return Poly(std::move(c));
}

// m_k by walking all edge subsets.
inline std::vector<std::uint64_t> matching_counts(const Graph& g) {
  const auto edges = g.edges();
  std::vector<std::uint64_t> m(g.n() / 2 + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    std::vector<char> used(g.n(), 0);
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!((s >> e) & 1)) continue;
      auto [u, v] = edges[e];
      ok = !used[u] && !used[v];
      used[u] = used[v] = 1;
      ++k;
    }
    if (ok) ++m[k];
  }
  return m;
}

inline Poly matching_poly(const Graph& g) {
  const auto m = matching_counts(g);
  std::vector<BigInt> c(g.n() + 1);
  for (std::size_t k = 0; k < m.size(); ++k) c[g.n() - 2 * k] = static_cast<unsigned long>(m[k]);
  return Poly(std::move(c));
}

inline std::uint64_t colourings(const Graph& g, std::size_t q) {
  const std::size_t n = g.n();
  if (n == 0) return 1;
  if (q == 0) return 0;
  std::vector<std::size_t> col(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (col[u] == col[v]) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < n && ++col[i] == q) col[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Chromatic polynomial by Lagrange interpolation through q = 0..n, done over
// rationals with the exact common denominator prod (i - j).
inline Poly chromatic_poly(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<mpq_class> acc(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const mpq_class yi = static_cast<unsigned long>(colourings(g, i));
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * static_cast<long>(j);
      }
      basis.swap(next);
      denom *= static_cast<long>(i) - static_cast<long>(j);
    }
    for (std::size_t d = 0; d <= n; ++d) acc[d] += basis[d] * yi / denom;
  }
  std::vector<BigInt> result(n + 1);
  for (std::size_t d = 0; d <= n; ++d) {
    acc[d].canonicalize();
    if (acc[d].get_den() != 1) throw std::logic_error("non-integer chromatic coefficient");
    result[d] = acc[d].get_num();
  }
  return Poly(std::move(result));
}

inline std::uint64_t perfect_matchings(const Graph& g) {
  if (g.n() % 2) return 0;
  return matching_counts(g)[g.n() / 2];
}

}  // namespace brute
