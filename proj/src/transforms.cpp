#include "polyjoin/transforms.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace polyjoin {

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::PiFwd: return "PI_FWD";
    case TransformKind::PiInv: return "PI_INV";
    case TransformKind::MuFwd: return "MU_FWD";
    case TransformKind::MuInv: return "MU_INV";
    case TransformKind::XiFwd: return "XI_FWD";
    case TransformKind::ChiFwd: return "CHI_FWD";
  }
  return "?";
}

std::string_view to_string(MomentFunctional kind) {
  switch (kind) {
    case MomentFunctional::Laguerre: return "LAGUERRE";
    case MomentFunctional::Exp: return "EXP";
    case MomentFunctional::Hermite: return "HERMITE";
  }
  return "?";
}

TransformKind inverse_of(TransformKind kind) {
  switch (kind) {
    case TransformKind::PiFwd: return TransformKind::PiInv;
    case TransformKind::PiInv: return TransformKind::PiFwd;
    case TransformKind::MuFwd: return TransformKind::MuInv;
    case TransformKind::MuInv: return TransformKind::MuFwd;
    case TransformKind::XiFwd: return TransformKind::ChiFwd;
    case TransformKind::ChiFwd: return TransformKind::XiFwd;
  }
  return kind;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt lah(unsigned long n, unsigned long k) {
  if (k < 1 || k > n) throw std::out_of_range("lah: requires 1 <= k <= n");
  BigInt r = factorial(n) * binomial(n - 1, k - 1);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(k).get_mpz_t());
  return r;
}

namespace {

std::vector<BigInt> image_row(TransformKind kind, unsigned long n, const Poly* previous) {
  std::vector<BigInt> row(n + 1);
  if (n == 0) {
    row[0] = 1;
    return row;
  }
  switch (kind) {
    case TransformKind::PiFwd:
    case TransformKind::PiInv: {
      // Walk k downward from L(n,n) = 1 using L(n,k-1) = L(n,k) k (k-1) / (n-k+1).
      BigInt v = 1;
      for (unsigned long k = n; k >= 1; --k) {
        row[k] = (kind == TransformKind::PiInv && ((n - k) & 1)) ? BigInt(-v) : v;
        if (k == 1) break;
        v *= k * (k - 1);
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), n - k + 1);
      }
      break;
    }
    case TransformKind::MuFwd:
    case TransformKind::MuInv: {
      // Term i is n! / ((n-2i)! 2^i i!) at degree n - 2i.
      BigInt v = 1;
      for (unsigned long i = 0; 2 * i <= n; ++i) {
        row[n - 2 * i] = (kind == TransformKind::MuInv && (i & 1)) ? BigInt(-v) : v;
        if (2 * i + 2 > n) break;
        v *= (n - 2 * i) * (n - 2 * i - 1);
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2 * (i + 1));
      }
      break;
    }
    case TransformKind::XiFwd: {
      // S(n,k) = k S(n-1,k) + S(n-1,k-1)
      for (unsigned long k = 1; k <= n; ++k) {
        row[k] = previous->coeff(k) * k + previous->coeff(k - 1);
      }
      break;
    }
    case TransformKind::ChiFwd: {
      // (t)_n = (t)_{n-1} * (t - (n-1))
      const long shift = static_cast<long>(n - 1);
      for (unsigned long k = 0; k <= n; ++k) {
        BigInt v = k >= 1 ? previous->coeff(k - 1) : BigInt(0);
        v -= previous->coeff(k) * shift;
        row[k] = std::move(v);
      }
      break;
    }
  }
  return row;
}

class ImageCache {
 public:
  Poly get(TransformKind kind, unsigned long n) {
    std::lock_guard lock(mu_);
    auto& rows = rows_[static_cast<std::size_t>(kind)];
    while (rows.size() <= n) {
      const unsigned long m = rows.size();
      rows.emplace_back(image_row(kind, m, m > 0 ? &rows.back() : nullptr));
    }
    return rows[n];
  }

 private:
  std::mutex mu_;
  std::array<std::vector<Poly>, 6> rows_;
};

ImageCache& cache() {
  static ImageCache c;
  return c;
}

using Coeffs = std::vector<BigInt>;

// r += a * c for a machine-word signed c.
inline void addmul_si(BigInt& r, const BigInt& a, long c) {
  if (c >= 0) {
    mpz_addmul_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(c));
  } else {
    mpz_submul_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-c));
  }
}

// acc <- acc * (t + c)
void mul_linear(Coeffs& acc, long c) {
  acc.emplace_back(0);
  for (std::size_t i = acc.size() - 1; i >= 1; --i) {
    mpz_mul_si(acc[i].get_mpz_t(), acc[i].get_mpz_t(), c);
    acc[i] += acc[i - 1];
  }
  mpz_mul_si(acc[0].get_mpz_t(), acc[0].get_mpz_t(), c);
}

// sum_n a_n prod_{j<n} (t + sign*j) expanded in the monomial basis (Horner).
// sign = +1 is the rising-factorial basis, sign = -1 the falling one.
Coeffs from_factorial_basis(std::span<const BigInt> a, long sign) {
  Coeffs acc;
  if (a.empty()) return acc;
  acc.reserve(a.size());
  acc.push_back(a.back());
  for (std::size_t n = a.size() - 1; n-- > 0;) {
    mul_linear(acc, sign * static_cast<long>(n));
    acc[0] += a[n];
  }
  return acc;
}

// Inverse of from_factorial_basis: repeated synthetic division by
// (t + sign*k), k = 0, 1, ..., collecting remainders.
Coeffs to_factorial_basis(Coeffs p, long sign) {
  Coeffs out(p.size());
  std::size_t lo = 0;  // p[lo..] is the current quotient
  for (std::size_t k = 0; lo < p.size(); ++k) {
    const long root = -sign * static_cast<long>(k);
    if (root != 0) {
      for (std::size_t i = p.size() - 1; i > lo; --i) {
        addmul_si(p[i - 1], p[i], root);
      }
    }
    out[k] = std::move(p[lo]);
    ++lo;
  }
  return out;
}

// Clenshaw summation of sum_n a_n U_n with U_0 = 1, U_1 = t,
// U_{n+1} = t U_n + sigma n U_{n-1}.
Coeffs hermite_like_sum(std::span<const BigInt> a, long sigma) {
  Coeffs b1, b2;  // b_{k+1}, b_{k+2}
  for (std::size_t k = a.size(); k-- > 0;) {
    // b_k = a_k + t b_{k+1} + sigma (k+1) b_{k+2}
    Coeffs bk(std::max(b1.size() + 1, b2.size()));
    for (std::size_t i = 0; i < b1.size(); ++i) bk[i + 1] = b1[i];
    const long f = sigma * static_cast<long>(k + 1);
    for (std::size_t i = 0; i < b2.size(); ++i) {
      addmul_si(bk[i], b2[i], f);
    }
    if (bk.empty()) bk.emplace_back(0);
    bk[0] += a[k];
    b2 = std::move(b1);
    b1 = std::move(bk);
  }
  return b1;
}

}  // namespace

BigInt stirling2(unsigned long n, unsigned long k) {
  if (k < 1 || k > n) throw std::out_of_range("stirling2: requires 1 <= k <= n");
  return cache().get(TransformKind::XiFwd, n).coeff(k);
}

Poly monomial_image(TransformKind kind, unsigned long n) { return cache().get(kind, n); }

Poly apply_transform(TransformKind kind, const Poly& p) {
  const auto a = p.coeffs();
  switch (kind) {
    case TransformKind::PiFwd:
      // Lah numbers carry rising factorials to falling ones.
      return Poly(to_factorial_basis(from_factorial_basis(a, +1), -1));
    case TransformKind::PiInv:
      return Poly(to_factorial_basis(from_factorial_basis(a, -1), +1));
    case TransformKind::MuFwd:
      return Poly(hermite_like_sum(a, +1));
    case TransformKind::MuInv:
      return Poly(hermite_like_sum(a, -1));
    case TransformKind::XiFwd:
      return Poly(to_factorial_basis(Coeffs(a.begin(), a.end()), -1));
    case TransformKind::ChiFwd:
      return Poly(from_factorial_basis(a, -1));
  }
  return {};
}

Poly apply_transform_reference(TransformKind kind, const Poly& p) {
  const auto a = p.coeffs();
  Coeffs out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (sgn(a[n]) == 0) continue;
    const Poly img = monomial_image(kind, n);
    for (std::size_t k = 0; k < img.size(); ++k) {
      mpz_addmul(out[k].get_mpz_t(), a[n].get_mpz_t(), img.coeffs()[k].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

BigInt moment(MomentFunctional kind, unsigned long k) {
  switch (kind) {
    case MomentFunctional::Laguerre:
      if (k == 0) throw DomainError("Laguerre functional undefined at t^0");
      return factorial(k - 1);
    case MomentFunctional::Exp:
      return factorial(k);
    case MomentFunctional::Hermite: {
      if (k & 1) return 0;
      BigInt r;
      mpz_2fac_ui(r.get_mpz_t(), k == 0 ? 0 : k - 1);
      return r;
    }
  }
  return 0;
}

BigInt apply_functional(MomentFunctional kind, const Poly& p) {
  const auto c = p.coeffs();
  if (c.empty()) return 0;
  if (kind == MomentFunctional::Laguerre && sgn(c[0]) != 0) {
    throw DomainError("Laguerre functional undefined at t^0: constant term must be zero");
  }
  BigInt total = 0;
  BigInt m = 1;  // running moment
  switch (kind) {
    case MomentFunctional::Laguerre:
      // (k-1)!: m = 0! at k = 1
      for (std::size_t k = 1; k < c.size(); ++k) {
        if (k >= 2) m *= static_cast<unsigned long>(k - 1);
        mpz_addmul(total.get_mpz_t(), c[k].get_mpz_t(), m.get_mpz_t());
      }
      break;
    case MomentFunctional::Exp:
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k >= 1) m *= static_cast<unsigned long>(k);
        mpz_addmul(total.get_mpz_t(), c[k].get_mpz_t(), m.get_mpz_t());
      }
      break;
    case MomentFunctional::Hermite:
      // (k-1)!! for even k: 1, 1, 3, 15, ...
      for (std::size_t k = 0; k < c.size(); k += 2) {
        if (k >= 2) m *= static_cast<unsigned long>(k - 1);
        mpz_addmul(total.get_mpz_t(), c[k].get_mpz_t(), m.get_mpz_t());
      }
      break;
  }
  return total;
}

BigInt inner_product(MomentFunctional kind, const Poly& f, const Poly& g) {
  return apply_functional(kind, mul(f, g));
}

}  // namespace polyjoin
