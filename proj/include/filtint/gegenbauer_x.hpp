#ifndef FILTINT_GEGENBAUER_X_HPP
#define FILTINT_GEGENBAUER_X_HPP

#include <vector>

#include "filtint/integrals.hpp"
#include "filtint/poly.hpp"

namespace filtint {

/// Polynomial in the Gegenbauer parameter a rather than in x.
using ParamPoly = Poly;

/// prod_{i=0}^{n-1} (a + offset + i), the rising factorial (a + offset)_n
/// as a polynomial in a.
ParamPoly pochhammer_poly(const Rational& offset, int n);

/// The integer-coefficient polynomial X_n(a) governing the even-order
/// Gegenbauer filter integrals:
///   X_n(a) = 2^(2n-1) (a+1/2)_n - binom(2n-1, n-1) (a)_n,  X_0 = 0.
/// Four independent routes to the same polynomial:
ParamPoly xn_closed(int n);
ParamPoly xn_recurrence_first(int n);
ParamPoly xn_recurrence_second(int n);
ParamPoly xn_sum(int n);

/// Coefficients of X_n in ascending powers of a, assembled from Stirling
/// numbers of the first kind instead of polynomial products.
std::vector<Rational> xn_coefficients_rho(int n);

/// Filter integral of order n for the Gegenbauer family, divided by the
/// weight's total mass mu0: once by expanding the polynomial and
/// integrating, once from the closed form built on X_n.
Rational gamma_ratio_direct(int n, const Rational& a);
Rational gamma_closed_ratio(int n, const Rational& a);

/// Gegenbauer polynomial of order n with the parameter left symbolic:
/// entry k is the coefficient of x^k as a polynomial in a.
std::vector<ParamPoly> gegenbauer_symbolic(int n);

/// Agreement of the symbolic coefficients and of the two integral routes at
/// 2n+1 integer parameter values. Cleared of denominators, both identities
/// have degree at most 2n in a, so 2n+1 agreements certify them.
VerificationReport verify_gegenbauer_symbolic(int n);

/// Value and coefficient identities of X_n, from the closed route:
/// X_n(-n) = 0, the constant and leading coefficients, the interior values
/// X_n(-k) for 1 <= k <= n-1, and the reflection X_n(k-n) = (-1)^n X_n(-k).
/// With certify_roots, additionally isolates the roots and certifies that
/// all n of them are real, simple and inside (-n-1, 0).
VerificationReport xn_properties(int n, bool certify_roots);

/// The telescoping certificate behind X_n(-n) = 0: with
///   F(n,k) = (2k-1-n) binom(2n-1, 2k-2) / (k^2 (2k-1) binom(n,k)^2),
///   G(n,k) = (k-n-1) binom(2n-1, 2k-2) / (k^2 binom(n,k)^2),
/// checks F(n,k) = G(n,k+1) - G(n,k) for 1 <= k <= n-1, the vanishing of
/// sum_k F(n,k), G(n,1) = -1/n, and G(n,n) + F(n,n) = -1/n.
VerificationReport wz_check(int n);

/// Root boxes of X_n and X_{n+1}, refined until pairwise disjoint, plus the
/// verdict on whether they alternate (each gap between consecutive roots of
/// X_{n+1} holding exactly one root of X_n).
struct InterlacingResult {
  bool interlaced = false;
  std::vector<RootBox> lower;  // roots of X_n
  std::vector<RootBox> upper;  // roots of X_{n+1}
};
InterlacingResult interlacing_check(int n);

/// X_n with coefficients reduced mod a prime.
PolyModP xn_mod_prime(int n, const PrimeModulus& q);

}  // namespace filtint

#endif
