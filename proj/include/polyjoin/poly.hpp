#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polyjoin {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Index i of the coefficient vector holds the coefficient of t^i. The vector
/// is kept normalized: the last stored coefficient is nonzero, and the zero
/// polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const BigInt& c);
  static Poly monomial(std::size_t degree, const BigInt& c = 1);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial. Throws std::logic_error on zero.
  std::size_t degree() const;

  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of t^i; zero past the end.
  BigInt coeff(std::size_t i) const;

  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Moves the coefficient vector out, leaving *this zero.
  std::vector<BigInt> release() &&;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Karatsuba recursion bottoms out to schoolbook below this many coefficients.
inline constexpr std::size_t kKaratsubaThreshold = 32;

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& p, const BigInt& c);

Poly mul(const Poly& a, const Poly& b);
Poly mul_schoolbook(const Poly& a, const Poly& b);
Poly mul_karatsuba(const Poly& a, const Poly& b, std::size_t threshold = kKaratsubaThreshold);

/// Product of all inputs through a balanced product tree. Empty input gives 1.
Poly mul_many(std::vector<Poly> ps);

/// p^m by binary exponentiation; pow(p, 0) == 1.
Poly pow(const Poly& p, unsigned long m);

/// Horner evaluation at an integer point.
BigInt eval_int(const Poly& p, const BigInt& x);

/// p(-t).
Poly negate_variable(const Poly& p);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

/// One `degree<TAB>coefficient` line per nonzero term, ascending degree.
std::string render_text(const Poly& p);

/// JSON array of decimal strings indexed by degree.
std::string render_json(const Poly& p);

/// Human-readable form, e.g. "t^3 - 3t^2 + 2t".
std::string render_pretty(const Poly& p);

}  // namespace polyjoin
