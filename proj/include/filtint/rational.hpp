#ifndef FILTINT_RATIONAL_HPP
#define FILTINT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "filtint/errors.hpp"

namespace filtint {

using Integer = mpz_class;

/// Exact rational number, always reduced to lowest terms with a positive
/// denominator. The canonical zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}                  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);
  // Exact match for gmp expression temporaries like factorial(n) * pow2(k),
  // which would otherwise convert ambiguously.
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& e) : v_(e) {  // NOLINT(google-explicit-constructor)
    mpq_canonicalize(v_.get_mpq_t());
  }

  /// Parses "p/q" or "p". Throws InvalidParameter on malformed input or q = 0.
  static Rational from_string(const std::string& s);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Lossless "numerator/denominator" form, e.g. "2/1", "-3/4".
  std::string to_string() const;
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;  // kept canonical by construction and by mpq arithmetic
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient with integer upper index, by the falling
/// product n(n-1)...(n-k+1)/k!. Returns 0 for k < 0. Negative n is supported,
/// so binomial(-x, y) = (-1)^y binomial(x+y-1, y).
Rational binomial(const Integer& n, long k);
inline Rational binomial(long n, long k) { return binomial(Integer(n), k); }

/// Rising factorial x(x+1)...(x+n-1); 1 when n = 0.
Rational pochhammer(const Rational& x, unsigned long n);

/// Harmonic number 1 + 1/2 + ... + 1/n; 0 when n = 0.
Rational harmonic(unsigned long n);

/// Unsigned Stirling numbers of the first kind c(n,j), satisfying
/// c(n+1,j) = n c(n,j) + c(n,j-1); the signed values are (-1)^{n-j} c(n,j).
Integer stirling1_unsigned(unsigned long n, unsigned long j);

/// Row n of the unsigned Stirling triangle, indices 0..n.
std::vector<Integer> stirling1_row(unsigned long n);

Integer factorial(unsigned long n);
Integer pow2(unsigned long e);

/// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime(std::uint64_t q);

}  // namespace filtint

#endif
