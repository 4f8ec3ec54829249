#pragma once

#include "polyjoin/poly.hpp"

#include <span>
#include <vector>

// Hamiltonian path and cycle counts of complete multipartite graphs
// K_{a_1,...,a_m}: an operator pipeline, balanced closed forms through
// partial Bell polynomials, and a binary-exponentiation route.

namespace polyjoin {

using PartSizes = std::vector<unsigned long>;

/// Throws std::invalid_argument unless parts is nonempty and all positive.
void check_parts(std::span<const unsigned long> parts);

/// Exponential partial Bell polynomial B_{k,m}(x_1, ..., x_{k-m+1}), defined by
/// (1/m!) (sum_j x_j t^j / j!)^m = sum_k B_{k,m} t^k / k!. Returns 0 when m > k.
/// Requires xs.size() >= k - m + 1 otherwise.
BigInt bell_partial(unsigned long k, unsigned long m, std::span<const BigInt> xs);

/// B_{k,m}(xs) for k = 0 .. m * xs.size(), from a single power of the
/// generating polynomial; entries beyond x_{xs.size()} are taken as zero.
std::vector<BigInt> bell_partial_row(unsigned long m, std::span<const BigInt> xs);

/// [t] phi_pi[prod_i phi_pi^-1[t^{a_i}]].
BigInt hp_multipartite(std::span<const unsigned long> parts);

/// Directed Hamiltonian paths of K_{n,...,n} (m parts) by the Bell closed form.
BigInt hp_balanced(unsigned long n, unsigned long m);

/// Same count via pow of phi_pi^-1[t^n]; [t] phi_pi[t^k] = k!.
BigInt hp_balanced_fast(unsigned long n, unsigned long m);

/// Directed Hamiltonian cycles of K_{a_1,...,a_{m+1}}, with the last part
/// designated: a! (a-1)! [t^a] phi_pi[prod_{i <= m} phi_pi^-1[t^{a_i}]], a = a_{m+1}.
/// Needs at least two parts.
BigInt hc_multipartite(std::span<const unsigned long> parts);

/// Directed Hamiltonian cycles of the complete (m+1)-partite K_{n,...,n}
/// by the Bell closed form.
BigInt hc_balanced(unsigned long n, unsigned long m);

/// Same count: n! (n-1)! [t^n] phi_pi[(phi_pi^-1[t^n])^m], with the power by
/// binary exponentiation and only the t^n coefficient of phi_pi extracted.
BigInt hc_balanced_fast(unsigned long n, unsigned long m);

enum class WalkKind { HamPath, HamCycle };

/// Moment forms over prod_i pi+_{K_{a_i}}: EXP moments count Hamiltonian
/// paths, LAGUERRE moments count Hamiltonian cycles.
BigInt laguerre_expectation_forms(std::span<const unsigned long> parts, WalkKind which);

}  // namespace polyjoin
