#ifndef FILTINT_POLY_HPP
#define FILTINT_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "filtint/rational.hpp"

namespace filtint {

/// Dense univariate polynomial over Rational. Canonical form: the
/// highest-index coefficient is nonzero, or the coefficient list is empty
/// (the zero polynomial, degree -1). Immutable in practice: every operation
/// returns a fresh value.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(std::vector<Rational> coeffs);  // normalizes trailing zeros

  static Poly variable() { return monomial(1, Rational(1)); }
  static Poly monomial(int degree, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i; 0 beyond the degree.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;
  Poly square() const { return *this * *this; }
  Poly derivative() const;
  Poly shifted_up(int k) const;  // multiply by x^k

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Rational evaluate(const Rational& x) const;  // Horner

  /// (p - p(0)) / x: drops the constant term and shifts indices down.
  Poly deflate_at_zero() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Quotient q with p = q*d exactly; throws NonZeroRemainder otherwise and
/// InvalidParameter when d is zero.
Poly exact_divide(const Poly& p, const Poly& d);

/// Division with remainder over the rationals, p = q*d + r, deg r < deg d.
struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& p, const Poly& d);

/// Primitive gcd (integer coefficients, positive leading, content 1).
Poly poly_gcd(const Poly& a, const Poly& b);

/// p with repeated factors removed: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Content-normalized copy: coefficients scaled by a positive rational so
/// they become coprime integers with no common factor.
Poly primitive_part(const Poly& p);

/// 1 + max |a_i| / |a_deg|: every real root lies in (-bound, bound).
Rational cauchy_root_bound(const Poly& p);

/// Number of distinct real roots of p in (lo, hi], by Sturm sign-variation
/// counts on the squarefree part (computed internally). Throws BoundaryRoot
/// when lo or hi is itself a root, and InvalidParameter unless lo < hi.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Rational interval certified (by Sturm count) to contain `count` roots.
struct RootBox {
  Rational lo;
  Rational hi;
  int count = 0;
};

/// Disjoint boxes, each holding exactly one real root of p, in increasing
/// order, refined to width <= max_width. Together they exhaust the real roots.
std::vector<RootBox> isolate_roots(const Poly& p, const Rational& max_width = Rational(1, 1024));

/// Halves a certified single-root box until its width is <= max_width.
RootBox refine_root_box(const Poly& p, RootBox box, const Rational& max_width);

/// Machine-size prime modulus, checked on construction.
struct PrimeModulus {
  explicit PrimeModulus(std::uint64_t prime);
  std::uint64_t q;
};

/// Polynomial over Z/qZ with residues in [0, q).
class PolyModP {
 public:
  PolyModP(std::vector<std::uint64_t> residues, PrimeModulus modulus);
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(int i) const;
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t modulus() const { return q_; }
  friend bool operator==(const PolyModP& a, const PolyModP& b) {
    return a.q_ == b.q_ && a.c_ == b.c_;
  }
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<std::uint64_t> c_;
  std::uint64_t q_;
};

/// Coefficient-wise reduction mod q, inverting denominators mod q. Throws
/// DenominatorNotInvertible when a denominator shares a factor with q.
PolyModP reduce_mod_prime(const Poly& p, const PrimeModulus& q);

}  // namespace filtint

#endif
