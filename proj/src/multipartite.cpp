#include "polyjoin/multipartite.hpp"

#include "polyjoin/transforms.hpp"

#include <stdexcept>

namespace polyjoin {

namespace {

BigInt divexact_checked(const BigInt& num, const BigInt& den, const char* where) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error(std::string(where) + ": scale factor did not cancel");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Inner generating polynomial cleared of denominators:
// sum_{j=1..J} x_j (J!/j!) t^j, to be divided by J! per factor.
Poly scaled_egf(std::span<const BigInt> xs) {
  const std::size_t J = xs.size();
  std::vector<BigInt> c(J + 1);
  BigInt ratio = 1;  // J!/j!, built from j = J downwards
  for (std::size_t j = J; j >= 1; --j) {
    c[j] = xs[j - 1] * ratio;
    ratio *= static_cast<unsigned long>(j);
  }
  return Poly(std::move(c));
}

Poly pi_inv_product(std::span<const unsigned long> parts) {
  std::vector<Poly> factors;
  factors.reserve(parts.size());
  for (unsigned long a : parts) factors.push_back(monomial_image(TransformKind::PiInv, a));
  return mul_many(std::move(factors));
}

std::vector<BigInt> binomial_row(unsigned long n) {
  // x_i = C(n-1, i-1), i = 1..n
  std::vector<BigInt> xs;
  xs.reserve(n);
  for (unsigned long i = 1; i <= n; ++i) xs.push_back(binomial(n - 1, i - 1));
  return xs;
}

void check_balanced(unsigned long n, unsigned long m) {
  if (n == 0 || m == 0) throw std::invalid_argument("balanced forms need n, m >= 1");
}

}  // namespace

void check_parts(std::span<const unsigned long> parts) {
  if (parts.empty()) throw std::invalid_argument("part list is empty");
  for (unsigned long a : parts) {
    if (a == 0) throw std::invalid_argument("part sizes must be positive");
  }
}

std::vector<BigInt> bell_partial_row(unsigned long m, std::span<const BigInt> xs) {
  const std::size_t J = xs.size();
  const std::size_t top = m * J;
  std::vector<BigInt> row(top + 1);
  if (m == 0) {
    row[0] = 1;
    return row;
  }
  if (J == 0) return row;
  const Poly q = pow(scaled_egf(xs), m);
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), factorial(J).get_mpz_t(), m);
  den *= factorial(m);
  BigInt kf = 1;
  for (std::size_t k = 0; k <= top; ++k) {
    if (k > 0) kf *= static_cast<unsigned long>(k);
    if (k < m || q.coeff(k) == 0) continue;
    row[k] = divexact_checked(q.coeff(k) * kf, den, "bell_partial");
  }
  return row;
}

BigInt bell_partial(unsigned long k, unsigned long m, std::span<const BigInt> xs) {
  if (m > k) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  const std::size_t need = k - m + 1;
  if (xs.size() < need) throw std::invalid_argument("bell_partial: too few arguments");
  return bell_partial_row(m, xs.first(need))[k];
}

BigInt hp_multipartite(std::span<const unsigned long> parts) {
  check_parts(parts);
  return apply_transform(TransformKind::PiFwd, pi_inv_product(parts)).coeff(1);
}

BigInt hp_balanced(unsigned long n, unsigned long m) {
  check_balanced(n, m);
  const auto xs = binomial_row(n);
  const auto b = bell_partial_row(m, xs);
  BigInt sum = 0;
  for (std::size_t k = m; k < b.size(); ++k) {
    if (k % 2) {
      sum -= b[k];
    } else {
      sum += b[k];
    }
  }
  BigInt pre;
  mpz_pow_ui(pre.get_mpz_t(), factorial(n).get_mpz_t(), m);
  pre *= factorial(m);
  if ((n * m) % 2) pre = -pre;
  return pre * sum;
}

BigInt hp_balanced_fast(unsigned long n, unsigned long m) {
  check_balanced(n, m);
  const Poly p = pow(monomial_image(TransformKind::PiInv, n), m);
  BigInt total = 0;
  BigInt kf = 1;
  for (std::size_t k = 1; k < p.size(); ++k) {
    kf *= static_cast<unsigned long>(k);
    total += p.coeff(k) * kf;
  }
  return total;
}

BigInt hc_multipartite(std::span<const unsigned long> parts) {
  check_parts(parts);
  if (parts.size() < 2) throw std::invalid_argument("hc_multipartite needs at least two parts");
  const unsigned long a = parts.back();
  const Poly r = apply_transform(TransformKind::PiFwd, pi_inv_product(parts.first(parts.size() - 1)));
  return factorial(a) * factorial(a - 1) * r.coeff(a);
}

BigInt hc_balanced(unsigned long n, unsigned long m) {
  check_balanced(n, m);
  const auto xs = binomial_row(n);
  const auto b = bell_partial_row(m, xs);
  BigInt sum = 0;
  for (std::size_t k = std::max<std::size_t>(m, n); k < b.size(); ++k) {
    const BigInt term = binomial(k - 1, n - 1) * b[k];
    if (k % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  BigInt pre;
  mpz_pow_ui(pre.get_mpz_t(), factorial(n).get_mpz_t(), m);
  pre *= factorial(n - 1) * factorial(m);
  if ((n * m) % 2) pre = -pre;
  return pre * sum;
}

BigInt hc_balanced_fast(unsigned long n, unsigned long m) {
  check_balanced(n, m);
  const Poly p = pow(monomial_image(TransformKind::PiInv, n), m);
  // [t^n] phi_pi[t^k] = L(k, n); walk the column with
  // L(k+1, n) = L(k, n) (k+1) k / (k+1-n).
  BigInt total = p.coeff(n);
  BigInt l = 1;  // L(n, n)
  for (std::size_t k = n; k + 1 < p.size(); ++k) {
    l *= static_cast<unsigned long>((k + 1) * k);
    mpz_divexact_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k + 1 - n));
    total += p.coeff(k + 1) * l;
  }
  return factorial(n) * factorial(n - 1) * total;
}

BigInt laguerre_expectation_forms(std::span<const unsigned long> parts, WalkKind which) {
  check_parts(parts);
  const Poly prod = pi_inv_product(parts);
  return apply_functional(
      which == WalkKind::HamPath ? MomentFunctional::Exp : MomentFunctional::Laguerre, prod);
}

}  // namespace polyjoin
