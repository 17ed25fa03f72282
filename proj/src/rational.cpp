#include "filtint/rational.hpp"

#include <array>
#include <ostream>

namespace filtint {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw InvalidParameter("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("malformed rational literal: '" + s + "'");
  }
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidParameter("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational binomial(const Integer& n, long k) {
  if (k < 0) return Rational(0);
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational pochhammer(const Rational& x, unsigned long n) {
  Rational acc(1);
  Rational term = x;
  for (unsigned long i = 0; i < n; ++i) {
    acc *= term;
    term += Rational(1);
  }
  return acc;
}

Rational harmonic(unsigned long n) {
  Rational acc(0);
  for (unsigned long k = 1; k <= n; ++k) acc += Rational(Integer(1), Integer(k));
  return acc;
}

std::vector<Integer> stirling1_row(unsigned long n) {
  std::vector<Integer> row{Integer(1)};  // c(0,0) = 1
  for (unsigned long m = 0; m < n; ++m) {
    std::vector<Integer> next(m + 2, Integer(0));
    for (unsigned long j = 0; j <= m; ++j) {
      next[j] += Integer(m) * row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

Integer stirling1_unsigned(unsigned long n, unsigned long j) {
  if (j > n) return Integer(0);
  return stirling1_row(n)[j];
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (q % p == 0) return q == p;
  }
  std::uint64_t d = q - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, q);
    if (x == 1 || x == q - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, q);
      if (x == q - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace filtint
