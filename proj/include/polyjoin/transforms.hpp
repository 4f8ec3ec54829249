#pragma once

#include "polyjoin/poly.hpp"

#include <stdexcept>
#include <string_view>

namespace polyjoin {

/// Linear basis changes between graph polynomials of a graph and of its
/// complement. Each kind is fixed by the image of t^n:
///
///   PiFwd  t^n -> sum_k L(n,k) t^k                       (Lah numbers)
///   PiInv  t^n -> sum_k (-1)^(n-k) L(n,k) t^k
///   MuFwd  t^n -> sum_i C(n,2i) (2i-1)!! t^(n-2i)
///   MuInv  t^n -> sum_i (-1)^i C(n,2i) (2i-1)!! t^(n-2i)
///   XiFwd  t^n -> sum_k S(n,k) t^k                       (Stirling, 2nd kind)
///   ChiFwd t^n -> t (t-1) ... (t-n+1)
///
/// PiFwd/PiInv, MuFwd/MuInv and XiFwd/ChiFwd are mutually inverse pairs.
enum class TransformKind { PiFwd, PiInv, MuFwd, MuInv, XiFwd, ChiFwd };

/// Integer moment functionals standing in for the Laguerre (t^-1 e^-t),
/// exponential (e^-t) and Gaussian weights.
enum class MomentFunctional { Laguerre, Exp, Hermite };

std::string_view to_string(TransformKind kind);
std::string_view to_string(MomentFunctional kind);
TransformKind inverse_of(TransformKind kind);

/// Functional applied outside its domain (Laguerre moment of t^0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// Lah number L(n,k) = n!/k! * C(n-1, k-1). Requires 1 <= k <= n.
BigInt lah(unsigned long n, unsigned long k);

/// Stirling number of the second kind. Requires 1 <= k <= n.
BigInt stirling2(unsigned long n, unsigned long k);

/// Image of t^n. Rows are cached; safe to call from several threads.
Poly monomial_image(TransformKind kind, unsigned long n);

/// Linear extension of monomial_image, computed through basis-change
/// recurrences in O(deg^2) big-by-small integer operations.
Poly apply_transform(TransformKind kind, const Poly& p);

/// Direct sum over monomial images. Reference route for apply_transform.
Poly apply_transform_reference(TransformKind kind, const Poly& p);

/// Moment of t^k under the functional. Laguerre is undefined at k = 0.
BigInt moment(MomentFunctional kind, unsigned long k);

/// sum_k coeff(p, k) * moment(kind, k). Throws DomainError for a Laguerre
/// functional applied to a polynomial with a nonzero constant term.
BigInt apply_functional(MomentFunctional kind, const Poly& p);

BigInt inner_product(MomentFunctional kind, const Poly& f, const Poly& g);

}  // namespace polyjoin
