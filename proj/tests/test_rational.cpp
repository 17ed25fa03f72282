#include "doctest.h"

#include "filtint/errors.hpp"
#include "filtint/rational.hpp"

using namespace filtint;

TEST_SUITE("rational") {

TEST_CASE("canonical form: reduced, positive denominator, canonical zero") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational(-4, -6).to_string() == "2/3");
  CHECK(Rational(0, 17).to_string() == "0/1");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK_THROWS_AS(Rational(1, 0), InvalidParameter);
}

TEST_CASE("string round trip") {
  for (const char* s : {"3/2", "-1/2", "0/1", "17/1", "-123456789123456789/97"}) {
    Rational r = Rational::from_string(s);
    CHECK(r.to_string() == s);
  }
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string("x"), InvalidParameter);
  CHECK_THROWS_AS(Rational::from_string("1/0"), InvalidParameter);
}

TEST_CASE("field arithmetic") {
  Rational a(3, 4), b(-2, 5);
  CHECK(a + b == Rational(7, 20));
  CHECK(a - b == Rational(23, 20));
  CHECK(a * b == Rational(-3, 10));
  CHECK(a / b == Rational(-15, 8));
  CHECK_THROWS_AS(a / Rational(0), InvalidParameter);
  CHECK(-a == Rational(-3, 4));
  CHECK(a.abs() == a);
  CHECK(b.abs() == Rational(2, 5));
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(b < a);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(10, 5).is_integer());
  CHECK_FALSE(a.is_integer());
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(4, 7) == Rational(0));
  CHECK(binomial(7, -1) == Rational(0));
  // Pascal triangle row property as an independent oracle
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("pochhammer rising factorial") {
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3), 2) == Rational(6));
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  // (1)_n = n!
  for (unsigned long n = 0; n <= 8; ++n)
    CHECK(pochhammer(Rational(1), n) == Rational(factorial(n)));
  // (x)_{m+n} = (x)_m (x+m)_n
  Rational x(5, 7);
  CHECK(pochhammer(x, 7) == pochhammer(x, 3) * pochhammer(x + Rational(3), 4));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(1) == Rational(1));
  CHECK(harmonic(2) == Rational(3, 2));
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK(harmonic(5) == Rational(137, 60));
}

TEST_CASE("factorial and powers of two") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
}

TEST_CASE("Stirling numbers of the first kind, unsigned") {
  // row n = 4 of the triangle: x(x+1)(x+2)(x+3) = 6x + 11x^2 + 6x^3 + x^4
  std::vector<Integer> row = stirling1_row(4);
  REQUIRE(row.size() == 5);
  CHECK(row[0] == 0);
  CHECK(row[1] == 6);
  CHECK(row[2] == 11);
  CHECK(row[3] == 6);
  CHECK(row[4] == 1);
  CHECK(stirling1_unsigned(4, 2) == 11);
  // sum of row n equals n! because (1)_n = n!
  for (unsigned long n = 1; n <= 10; ++n) {
    Integer sum(0);
    for (const auto& c : stirling1_row(n)) sum += c;
    CHECK(sum == factorial(n));
  }
  // rising factorial expansion oracle at a sample point
  Rational x(3, 2);
  for (unsigned long n = 1; n <= 8; ++n) {
    std::vector<Integer> cs = stirling1_row(n);
    Rational horner(0);
    for (std::size_t j = cs.size(); j-- > 0;) horner = horner * x + Rational(cs[j]);
    CHECK(horner == pochhammer(x, n));
  }
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(561));   // Carmichael number
  CHECK_FALSE(is_prime(49141 * 2u));
  CHECK(is_prime(1000000007ULL));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693951ULL - 2));
  int count = 0;
  for (std::uint64_t q = 2; q <= 100; ++q)
    if (is_prime(q)) ++count;
  CHECK(count == 25);
}

}  // TEST_SUITE
