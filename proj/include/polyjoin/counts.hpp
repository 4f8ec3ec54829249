#pragma once

#include "polyjoin/cotree.hpp"
#include "polyjoin/graph.hpp"
#include "polyjoin/poly.hpp"

#include <cstddef>
#include <stdexcept>

namespace polyjoin {

/// Raised when a count is requested on a graph too small for the formula;
/// the cyclic-ordering convention for n <= 2 lives in the oracle instead.
class ConventionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Constant term of an unsigned matching polynomial.
BigInt perfect_matchings(const Poly& mu);

/// Coefficient of t in a path-cover polynomial.
BigInt ham_paths(const Poly& pi);

/// Directed Hamiltonian cycles of a cograph. A Join root means the complement
/// is disconnected, so c(G) = sum_k (-1)^(k-1) (k-1)! [t^k] pi_G. A Union root
/// gives 0. Throws ConventionError below 3 leaves.
BigInt ham_cycles_cograph(const Cotree& ct);

/// LAGUERRE functional of pi+ of the complement, which equals
/// c(G) + (-1)^(n-1) c(complement). Oracle-scale graphs only.
BigInt cycle_characteristic(const Graph& g);

/// Same functional, given pi+ of the complement directly.
BigInt cycle_characteristic_from(const Poly& pi_plus_complement);

/// c(G join H) = sum_{k >= 1} k! (k-1)! [t^k]pi_G [t^k]pi_H.
BigInt ham_cycles_join(const Poly& pi_g, const Poly& pi_h);

/// Directed Hamiltonian paths from pi+ of the complement (EXP moments).
BigInt ham_paths_via_inner(const Poly& pi_plus_complement);

/// m(G join H) as the HERMITE inner product of the complements' mu+.
BigInt perfect_matchings_join(const Poly& mu_plus_g_bar, const Poly& mu_plus_h_bar);

BigInt colorings(const Poly& chi, const BigInt& lambda);

/// |chi(-1)|.
BigInt acyclic_orientations(const Poly& chi);

struct PoissonResult {
  double residual = 0;      // |series - xi(lambda)| / max(1, |xi(lambda)|)
  double expected = 0;      // xi_G(lambda)
  double series = 0;        // truncated E[chi_{complement}(X)], X ~ Poisson(lambda)
  std::size_t terms = 0;    // J + 1
};

inline constexpr std::size_t kPoissonMaxTerms = 10'000;

/// Compares xi_G(lambda) with the Poisson expectation of the complement's
/// chromatic polynomial. The series is truncated once a geometric bound on
/// the tail drops below eps * max(1, |xi(lambda)|) / 1000. Requires
/// 0 < lambda <= 10; throws std::runtime_error if the bound is not reached
/// within kPoissonMaxTerms terms.
PoissonResult poisson_check(const Poly& xi_g, const Poly& chi_g_bar, double lambda,
                            double eps = 1e-9);

}  // namespace polyjoin
