#include "polyjoin/oracles.hpp"

#include "polyjoin/simd_kernels.hpp"

#include <unordered_map>
#include <vector>

namespace polyjoin {

OracleLimitError::OracleLimitError(const std::string& oracle, std::size_t n, std::size_t limit)
    : std::runtime_error("oracle limit exceeded: " + oracle + " supports at most " +
                         std::to_string(limit) + " vertices, got " + std::to_string(n)),
      limit_(limit) {}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void guard(const char* name, const Graph& g, std::size_t limit) {
  if (g.n() > limit) throw OracleLimitError(name, g.n(), limit);
}

BigInt to_big(u128 v) {
  BigInt hi = static_cast<unsigned long>(static_cast<u64>(v >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<u64>(v));
  return (hi << 64) + lo;
}

std::vector<u64> masks(const Graph& g) {
  std::vector<u64> adj(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) adj[v] = g.row_mask(v);
  return adj;
}

// dp[S * n + v] = number of Hamiltonian paths of G[S] ending at v.
std::vector<u64> ham_path_table(const std::vector<u64>& adj) {
  const std::size_t n = adj.size();
  const std::size_t full = std::size_t{1} << n;
  std::vector<u64> dp(full * n, 0);
  for (std::size_t s = 1; s < full; ++s) {
    u64 bits = s;
    while (bits) {
      const std::size_t v = static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      const std::size_t prev = s ^ (std::size_t{1} << v);
      dp[s * n + v] = prev == 0 ? 1 : simd::masked_sum(&dp[prev * n], adj[v] & prev, n);
    }
  }
  return dp;
}

// Partition DP anchored at the lowest vertex: dp[S] = sum over blocks T of S
// containing min(S) of weight[T] * t * dp[S \ T]. Coefficients fit in 64 bits
// for n <= 16 (bounded by the Lah-number row sum of K_16, ~1.3e15).
Poly block_partition_poly(std::size_t n, const std::vector<u64>& weight) {
  const std::size_t full = std::size_t{1} << n;
  const std::size_t width = n + 1;
  std::vector<u64> dp(full * width, 0);
  dp[0] = 1;
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t low = s & (~s + 1);
    const std::size_t rest = s ^ low;
    u64* out = &dp[s * width];
    // enumerate sub subset of rest, T = sub | low
    std::size_t sub = rest;
    while (true) {
      const std::size_t t = sub | low;
      if (const u64 w = weight[t]; w != 0) {
        const std::size_t remaining = s ^ t;
        const auto len = static_cast<std::size_t>(__builtin_popcountll(remaining)) + 1;
        simd::axpy_u64(out + 1, &dp[remaining * width], w, len);
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  std::vector<BigInt> coeffs(width);
  for (std::size_t k = 0; k < width; ++k) {
    coeffs[k] = static_cast<unsigned long>(dp[(full - 1) * width + k]);
  }
  return Poly(std::move(coeffs));
}

}  // namespace

Poly path_cover_poly_oracle(const Graph& g) {
  guard("path_cover_poly_oracle", g, kSubsetPartitionLimit);
  const std::size_t n = g.n();
  const auto table = ham_path_table(masks(g));
  const std::size_t full = std::size_t{1} << n;
  std::vector<u64> dhp(full, 0);
  for (std::size_t s = 1; s < full; ++s) {
    for (std::size_t v = 0; v < n; ++v) dhp[s] += table[s * n + v];
  }
  return block_partition_poly(n, dhp);
}

Poly clique_cover_poly_oracle(const Graph& g) {
  guard("clique_cover_poly_oracle", g, kSubsetPartitionLimit);
  const std::size_t n = g.n();
  const auto adj = masks(g);
  const std::size_t full = std::size_t{1} << n;
  std::vector<u64> is_clique(full, 0);
  is_clique[0] = 1;
  for (std::size_t s = 1; s < full; ++s) {
    const auto v = static_cast<std::size_t>(__builtin_ctzll(s));
    const std::size_t rest = s ^ (std::size_t{1} << v);
    is_clique[s] = is_clique[rest] && (adj[v] & rest) == rest;
  }
  return block_partition_poly(n, is_clique);
}

Poly chromatic_poly_oracle(const Graph& g) {
  guard("chromatic_poly_oracle", g, kSubsetPartitionLimit);
  const std::size_t n = g.n();
  if (n == 0) return Poly::constant(1);
  const auto adj = masks(g);
  const std::size_t full = std::size_t{1} << n;

  std::vector<char> independent(full, 0);
  independent[0] = 1;
  for (std::size_t s = 1; s < full; ++s) {
    const auto v = static_cast<std::size_t>(__builtin_ctzll(s));
    const std::size_t rest = s ^ (std::size_t{1} << v);
    independent[s] = independent[rest] && (adj[v] & rest) == 0;
  }

  // colourings[q] = proper colourings of G with q labelled colours, q = 0..n.
  // f[S] = colourings of G[S] with the colours used so far (classes may be empty).
  std::vector<BigInt> colourings(n + 1);
  colourings[0] = 0;
  std::vector<u128> f(full, 0), next(full, 0);
  f[0] = 1;
  for (std::size_t q = 1; q <= n; ++q) {
    for (std::size_t s = 0; s < full; ++s) {
      u128 acc = 0;
      std::size_t sub = s;
      while (true) {
        if (independent[sub]) acc += f[s ^ sub];
        if (sub == 0) break;
        sub = (sub - 1) & s;
      }
      next[s] = acc;
    }
    f.swap(next);
    colourings[q] = to_big(f[full - 1]);
  }

  // Newton forward differences at 0: P(t) = sum_k D^k P(0) C(t, k).
  std::vector<BigInt> diff = colourings;
  std::vector<BigInt> newton(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    newton[k] = diff[0];
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }

  // n! P(t) = sum_k D^k P(0) (n!/k!) (t)_k, then divide through by n!.
  std::vector<BigInt> acc(n + 1);
  std::vector<BigInt> falling{1};  // (t)_k
  BigInt nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  BigInt ratio = nfact;  // n!/k!
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      mpz_divexact_ui(ratio.get_mpz_t(), ratio.get_mpz_t(), k);
      std::vector<BigInt> grown(falling.size() + 1);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        grown[i + 1] += falling[i];
        grown[i] -= falling[i] * static_cast<unsigned long>(k - 1);
      }
      falling.swap(grown);
    }
    const BigInt w = newton[k] * ratio;
    for (std::size_t i = 0; i < falling.size(); ++i) acc[i] += w * falling[i];
  }
  for (auto& c : acc) {
    if (!mpz_divisible_p(c.get_mpz_t(), nfact.get_mpz_t())) {
      throw std::logic_error("chromatic interpolation produced a non-integer coefficient");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), nfact.get_mpz_t());
  }
  return Poly(std::move(acc));
}

Poly matching_poly_oracle(const Graph& g) {
  guard("matching_poly_oracle", g, kMatchingLimit);
  const std::size_t n = g.n();
  const auto adj = masks(g);
  std::unordered_map<u64, std::vector<u64>> memo;

  // counts[k] = number of k-matchings of G[S]
  auto solve = [&](auto&& self, u64 s) -> std::vector<u64> {
    if (s == 0) return {1};
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const auto v = static_cast<std::size_t>(__builtin_ctzll(s));
    const u64 rest = s ^ (u64{1} << v);
    std::vector<u64> counts = self(self, rest);
    counts.resize(static_cast<std::size_t>(__builtin_popcountll(s)) / 2 + 1, 0);
    u64 partners = adj[v] & rest;
    while (partners) {
      const auto u = static_cast<std::size_t>(__builtin_ctzll(partners));
      partners &= partners - 1;
      const auto sub = self(self, rest ^ (u64{1} << u));
      for (std::size_t k = 0; k < sub.size(); ++k) counts[k + 1] += sub[k];
    }
    memo.emplace(s, counts);
    return counts;
  };

  const u64 all = n == 64 ? ~u64{0} : (u64{1} << n) - 1;
  const auto counts = solve(solve, all);
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t k = 0; k < counts.size() && 2 * k <= n; ++k) {
    coeffs[n - 2 * k] = static_cast<unsigned long>(counts[k]);
  }
  return Poly(std::move(coeffs));
}

BigInt count_directed_ham_paths(const Graph& g) {
  guard("count_directed_ham_paths", g, kHamiltonianLimit);
  const std::size_t n = g.n();
  if (n == 0) return 0;
  const auto table = ham_path_table(masks(g));
  const std::size_t last = (std::size_t{1} << n) - 1;
  u64 total = 0;
  for (std::size_t v = 0; v < n; ++v) total += table[last * n + v];
  return static_cast<unsigned long>(total);
}

BigInt count_directed_ham_cycles(const Graph& g) {
  guard("count_directed_ham_cycles", g, kHamiltonianLimit);
  const std::size_t n = g.n();
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (n == 2) return g.has_edge(0, 1) ? 1 : 0;

  // Paths leaving vertex 0 through vertices 1..n-1 (relabelled to bits 0..n-2).
  const std::size_t m = n - 1;
  std::vector<u64> adj(m);
  for (std::size_t i = 0; i < m; ++i) adj[i] = g.row_mask(i + 1) >> 1;
  const u64 from_root = g.row_mask(0) >> 1;
  const std::size_t full = std::size_t{1} << m;
  std::vector<u64> dp(full * m, 0);
  for (std::size_t s = 1; s < full; ++s) {
    u64 bits = s;
    while (bits) {
      const auto v = static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      const std::size_t prev = s ^ (std::size_t{1} << v);
      dp[s * m + v] = prev == 0 ? ((from_root >> v) & 1)
                                : simd::masked_sum(&dp[prev * m], adj[v] & prev, m);
    }
  }
  return static_cast<unsigned long>(simd::masked_sum(&dp[(full - 1) * m], from_root, m));
}

BigInt count_perfect_matchings(const Graph& g) { return matching_poly_oracle(g).coeff(0); }

Poly signed_path_cover_poly(const Poly& p, std::size_t n) {
  Poly q = negate_variable(p);
  return (n & 1) ? scale(q, -1) : q;
}

Poly signed_matching_poly(const Poly& p, std::size_t n) {
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t d = 0; d < out.size(); ++d) {
    if (d > n || (n - d) % 2 != 0) continue;
    const std::size_t k = (n - d) / 2;
    if (k & 1) out[d] = -out[d];
  }
  return Poly(std::move(out));
}

}  // namespace polyjoin
