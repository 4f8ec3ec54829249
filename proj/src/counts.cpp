#include "polyjoin/counts.hpp"

#include "polyjoin/oracles.hpp"
#include "polyjoin/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyjoin {

BigInt perfect_matchings(const Poly& mu) { return mu.coeff(0); }

BigInt ham_paths(const Poly& pi) { return pi.coeff(1); }

BigInt ham_cycles_cograph(const Cotree& ct) {
  if (ct.leaf_count() < 3) {
    throw ConventionError("ham_cycles_cograph needs at least 3 vertices; for n <= 2 use the "
                          "oracle, which follows the cyclic-ordering convention");
  }
  if (ct.kind() == Cotree::Kind::Union) return 0;
  const Poly pi = compute_graph_polynomial(ct, PolyKind::PathCover);
  BigInt total = 0;
  BigInt f = 1;  // (k-1)!
  for (std::size_t k = 1; k < pi.size(); ++k) {
    if (k > 1) f *= static_cast<unsigned long>(k - 1);
    if (k % 2 == 1) {
      total += pi.coeff(k) * f;
    } else {
      total -= pi.coeff(k) * f;
    }
  }
  return total;
}

BigInt cycle_characteristic_from(const Poly& pi_plus_complement) {
  return apply_functional(MomentFunctional::Laguerre, pi_plus_complement);
}

BigInt cycle_characteristic(const Graph& g) {
  const Graph gbar = complement(g);
  return cycle_characteristic_from(signed_path_cover_poly(path_cover_poly_oracle(gbar), g.n()));
}

BigInt ham_cycles_join(const Poly& pi_g, const Poly& pi_h) {
  BigInt total = 0;
  BigInt kf = 1;   // k!
  BigInt km1 = 1;  // (k-1)!
  const std::size_t top = std::min(pi_g.size(), pi_h.size());
  for (std::size_t k = 1; k < top; ++k) {
    kf *= static_cast<unsigned long>(k);
    if (k > 1) km1 *= static_cast<unsigned long>(k - 1);
    total += kf * km1 * pi_g.coeff(k) * pi_h.coeff(k);
  }
  return total;
}

BigInt ham_paths_via_inner(const Poly& pi_plus_complement) {
  return apply_functional(MomentFunctional::Exp, pi_plus_complement);
}

BigInt perfect_matchings_join(const Poly& mu_plus_g_bar, const Poly& mu_plus_h_bar) {
  return inner_product(MomentFunctional::Hermite, mu_plus_g_bar, mu_plus_h_bar);
}

BigInt colorings(const Poly& chi, const BigInt& lambda) { return eval_int(chi, lambda); }

BigInt acyclic_orientations(const Poly& chi) { return abs(eval_int(chi, -1)); }

PoissonResult poisson_check(const Poly& xi_g, const Poly& chi_g_bar, double lambda, double eps) {
  if (!(lambda > 0.0 && lambda <= 10.0)) {
    throw std::invalid_argument("poisson_check: lambda must lie in (0, 10]");
  }
  PoissonResult out;
  for (std::size_t i = xi_g.size(); i-- > 0;) out.expected = out.expected * lambda + xi_g.coeff(i).get_d();

  // |chi(j)| <= a * (j+1)^d with a = sum |c_i|
  double a = 0;
  for (const auto& c : chi_g_bar.coeffs()) a += std::fabs(c.get_d());
  const double d = chi_g_bar.is_zero() ? 0.0 : static_cast<double>(chi_g_bar.degree());
  const double target = eps * std::max(1.0, std::fabs(out.expected)) * 1e-3;

  double weight = std::exp(-lambda);  // e^-lambda lambda^j / j!
  double sum = 0;
  for (std::size_t j = 0; j < kPoissonMaxTerms; ++j) {
    sum += weight * eval_int(chi_g_bar, static_cast<unsigned long>(j)).get_d();
    const double next_weight = weight * lambda / static_cast<double>(j + 1);
    // Bound on the term at j+1 and the ratio of successive bounds beyond it.
    const double jn = static_cast<double>(j + 1);
    const double u = next_weight * a * std::pow(jn + 1, d);
    const double r = lambda / (jn + 1) * std::pow((jn + 2) / (jn + 1), d);
    weight = next_weight;
    if (r < 1 && u / (1 - r) < target) {
      out.series = sum;
      out.terms = j + 1;
      out.residual = std::fabs(sum - out.expected) / std::max(1.0, std::fabs(out.expected));
      return out;
    }
  }
  throw std::runtime_error("poisson_check: tail bound not reached within " +
                           std::to_string(kPoissonMaxTerms) + " terms");
}

}  // namespace polyjoin
