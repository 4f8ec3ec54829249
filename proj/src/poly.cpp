#include "polyjoin/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyjoin {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

std::size_t Poly::degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

BigInt Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

std::vector<BigInt> Poly::release() && { return std::move(coeffs_); }

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<BigInt> out(big.coeffs().begin(), big.coeffs().end());
  for (std::size_t i = 0; i < small.size(); ++i) out[i] += small.coeffs()[i];
  return Poly(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b.coeffs()[i];
  return Poly(std::move(out));
}

Poly scale(const Poly& p, const BigInt& c) {
  std::vector<BigInt> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p.coeffs()[i] * c;
  return Poly(std::move(out));
}

namespace {

using Span = std::span<const BigInt>;

// out[i + j] += a[i] * b[j]; out must hold a.size() + b.size() - 1 entries.
void schoolbook_acc(Span a, Span b, std::span<BigInt> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

std::vector<BigInt> sum_halves(Span lo, Span hi) {
  std::vector<BigInt> s(std::max(lo.size(), hi.size()));
  for (std::size_t i = 0; i < lo.size(); ++i) s[i] = lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) s[i] += hi[i];
  return s;
}

void karatsuba_acc(Span a, Span b, std::span<BigInt> out, std::size_t threshold) {
  if (a.empty() || b.empty()) return;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < threshold) {
    schoolbook_acc(a, b, out);
    return;
  }
  // Unbalanced operands: cut the long side into blocks the size of the short one.
  if (b.size() * 2 <= a.size()) {
    for (std::size_t off = 0; off < a.size(); off += b.size()) {
      const std::size_t len = std::min(b.size(), a.size() - off);
      karatsuba_acc(a.subspan(off, len), b, out.subspan(off, len + b.size() - 1), threshold);
    }
    return;
  }

  const std::size_t m = a.size() / 2;
  Span a0 = a.first(m), a1 = a.subspan(m);
  Span b0 = b.first(std::min(m, b.size())), b1 = b.subspan(std::min(m, b.size()));

  std::vector<BigInt> z0(a0.size() + b0.size() - 1);
  karatsuba_acc(a0, b0, z0, threshold);
  std::vector<BigInt> z2;
  if (!b1.empty()) {
    z2.resize(a1.size() + b1.size() - 1);
    karatsuba_acc(a1, b1, z2, threshold);
  }
  auto sa = sum_halves(a0, a1);
  auto sb = sum_halves(b0, b1);
  std::vector<BigInt> z1(sa.size() + sb.size() - 1);
  karatsuba_acc(sa, sb, z1, threshold);

  for (std::size_t i = 0; i < z0.size(); ++i) {
    z1[i] -= z0[i];
    out[i] += z0[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    z1[i] -= z2[i];
    out[i + 2 * m] += z2[i];
  }
  // z1 may carry trailing zeros past the true product length.
  const std::size_t limit = std::min(z1.size(), out.size() - m);
  for (std::size_t i = 0; i < limit; ++i) out[i + m] += z1[i];
}

}  // namespace

Poly mul_schoolbook(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  schoolbook_acc(a.coeffs(), b.coeffs(), out);
  return Poly(std::move(out));
}

Poly mul_karatsuba(const Poly& a, const Poly& b, std::size_t threshold) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  karatsuba_acc(a.coeffs(), b.coeffs(), out, std::max<std::size_t>(threshold, 2));
  return Poly(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_schoolbook(a, b);
  return mul_karatsuba(a, b, kKaratsubaThreshold);
}

Poly mul_many(std::vector<Poly> ps) {
  if (ps.empty()) return Poly::constant(1);
  // Repeatedly multiply the two smallest factors so partial products stay
  // comparable in degree.
  auto larger = [](const Poly& x, const Poly& y) { return x.size() > y.size(); };
  std::make_heap(ps.begin(), ps.end(), larger);
  while (ps.size() > 1) {
    std::pop_heap(ps.begin(), ps.end(), larger);
    Poly x = std::move(ps.back());
    ps.pop_back();
    std::pop_heap(ps.begin(), ps.end(), larger);
    ps.back() = mul(x, ps.back());
    std::push_heap(ps.begin(), ps.end(), larger);
  }
  return std::move(ps.front());
}

Poly pow(const Poly& p, unsigned long m) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (m > 0) {
    if (m & 1UL) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

BigInt eval_int(const Poly& p, const BigInt& x) {
  BigInt acc = 0;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

Poly negate_variable(const Poly& p) {
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Poly(std::move(out));
}

std::string render_text(const Poly& p) {
  std::ostringstream os;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) os << i << '\t' << c[i].get_str() << '\n';
  }
  return os.str();
}

std::string render_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr.dump();
}

std::string render_pretty(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    BigInt mag = abs(c[i]);
    if (first) {
      if (sgn(c[i]) < 0) os << '-';
    } else {
      os << (sgn(c[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace polyjoin
