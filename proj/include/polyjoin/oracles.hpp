#pragma once

#include "polyjoin/graph.hpp"
#include "polyjoin/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

// Exhaustive subset-DP enumerators. They know nothing about transforms and
// serve as ground truth for every identity the engine relies on.

namespace polyjoin {

/// Raised when an oracle is asked for a graph larger than its size guard.
class OracleLimitError : public std::runtime_error {
 public:
  OracleLimitError(const std::string& oracle, std::size_t n, std::size_t limit);
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

inline constexpr std::size_t kSubsetPartitionLimit = 16;  // O(3^n) DPs
inline constexpr std::size_t kHamiltonianLimit = 20;      // O(2^n n^2) DPs
inline constexpr std::size_t kMatchingLimit = 24;

/// sum_k p_k(G) t^k, p_k = number of covers of V by k vertex-disjoint directed
/// paths (an undirected path on >= 2 vertices counts once per direction).
Poly path_cover_poly_oracle(const Graph& g);

/// sum_k m_k(G) t^(n-2k), m_k = number of k-edge matchings. All coefficients
/// are nonnegative.
Poly matching_poly_oracle(const Graph& g);

/// sum_k s_k(G) t^k, s_k = number of partitions of V into k cliques.
Poly clique_cover_poly_oracle(const Graph& g);

/// Chromatic polynomial. Counts proper colourings with q = 0..n labelled
/// colours by an independent-set layering DP, then interpolates exactly.
Poly chromatic_poly_oracle(const Graph& g);

/// Number of vertex sequences covering V with consecutive vertices adjacent.
BigInt count_directed_ham_paths(const Graph& g);

/// Directed Hamiltonian cycles as cyclic sequences; each undirected cycle is
/// counted twice. Cyclic-ordering convention for tiny graphs: n = 1 gives 1,
/// n = 2 gives 1 if the edge exists and 0 otherwise, so c(K_m) = (m-1)! for
/// every m >= 1.
BigInt count_directed_ham_cycles(const Graph& g);

/// Brute-force count of perfect matchings (constant term of the matching poly).
BigInt count_perfect_matchings(const Graph& g);

/// sum_k (-1)^(n-k) p_k t^k, i.e. (-1)^n p(-t).
Poly signed_path_cover_poly(const Poly& p, std::size_t n);

/// sum_k (-1)^k m_k t^(n-2k): the coefficient at degree d = n - 2k flips sign
/// when k is odd.
Poly signed_matching_poly(const Poly& p, std::size_t n);

}  // namespace polyjoin
