#include "doctest.h"

#include <vector>

#include "filtint/errors.hpp"
#include "filtint/integrals.hpp"

using namespace filtint;

namespace {

const Family kLegendre{FamilyKind::Legendre};
const Family kHermite{FamilyKind::Hermite};
const Family kChebT{FamilyKind::ChebyshevT};
const Family kChebU{FamilyKind::ChebyshevU};
const Family kLaguerre{FamilyKind::Laguerre};

std::vector<Family> all_families() {
  return {kLegendre, kHermite,
          kChebT,    kChebU,
          kLaguerre, Family(FamilyKind::Gegenbauer, Rational(1, 2)),
          Family(FamilyKind::Gegenbauer, Rational(2)),
          Family(FamilyKind::Gegenbauer, Rational(7, 3)),
          Family(FamilyKind::Gegenbauer, Rational(-1, 4))};
}

}  // namespace

TEST_SUITE("integrals") {

TEST_CASE("weight moments: hand-checked small cases") {
  CHECK(weight_moment(kLegendre, 0) == IntegralValue(Rational(2), ConstantTag::One));
  CHECK(weight_moment(kLegendre, 2) == IntegralValue(Rational(2, 3), ConstantTag::One));
  CHECK(weight_moment(kLegendre, 4) == IntegralValue(Rational(2, 5), ConstantTag::One));

  CHECK(weight_moment(kHermite, 0) == IntegralValue(Rational(1), ConstantTag::SqrtPi));
  CHECK(weight_moment(kHermite, 2) == IntegralValue(Rational(1, 2), ConstantTag::SqrtPi));
  CHECK(weight_moment(kHermite, 4) == IntegralValue(Rational(3, 4), ConstantTag::SqrtPi));
  CHECK(weight_moment(kHermite, 6) == IntegralValue(Rational(15, 8), ConstantTag::SqrtPi));

  CHECK(weight_moment(kChebT, 0) == IntegralValue(Rational(1), ConstantTag::Pi));
  CHECK(weight_moment(kChebT, 2) == IntegralValue(Rational(1, 2), ConstantTag::Pi));
  CHECK(weight_moment(kChebT, 4) == IntegralValue(Rational(3, 8), ConstantTag::Pi));

  CHECK(weight_moment(kChebU, 0) == IntegralValue(Rational(1, 2), ConstantTag::Pi));
  CHECK(weight_moment(kChebU, 2) == IntegralValue(Rational(1, 8), ConstantTag::Pi));
  CHECK(weight_moment(kChebU, 4) == IntegralValue(Rational(1, 16), ConstantTag::Pi));

  for (int m : {0, 1, 2, 3, 4, 5})
    CHECK(weight_moment(kLaguerre, m) ==
          IntegralValue(Rational(factorial(static_cast<unsigned long>(m))), ConstantTag::One));

  Family geg(FamilyKind::Gegenbauer, Rational(2));
  CHECK(weight_moment(geg, 0) == IntegralValue(Rational(1), ConstantTag::Mu0));
  CHECK(weight_moment(geg, 2) == IntegralValue(Rational(1, 6), ConstantTag::Mu0));
  CHECK(weight_moment(geg, 4) == IntegralValue(Rational(1, 16), ConstantTag::Mu0));

  for (const auto& fam : all_families()) {
    if (fam.kind() == FamilyKind::Laguerre) continue;
    for (int m : {1, 3, 5, 7}) CHECK(weight_moment(fam, m).is_zero());
  }
  CHECK_THROWS_AS(weight_moment(kLegendre, -1), InvalidParameter);
}

TEST_CASE("gegenbauer moments specialize to the legendre and chebyshev weights") {
  // a = 1/2 is the flat weight; moments differ from legendre only by tag.
  Family flat(FamilyKind::Gegenbauer, Rational(1, 2));
  for (int m = 0; m <= 12; m += 2) {
    IntegralValue g = weight_moment(flat, m);
    CHECK(g.coefficient() * Rational(2) == weight_moment(kLegendre, m).coefficient());
  }
  // a = 1 is the semicircle weight; mu0 there equals pi/2.
  Family semi(FamilyKind::Gegenbauer, Rational(1));
  for (int m = 0; m <= 12; m += 2) {
    CHECK(weight_moment(semi, m).coefficient() * Rational(1, 2) ==
          weight_moment(kChebU, m).coefficient());
  }
}

TEST_CASE("termwise integration is linear and matches hand integrals") {
  // p(x) = 3x^2 - 2x + 5 against the flat weight on [-1, 1]: 2 + 10 = 12.
  Poly p(std::vector<Rational>{Rational(5), Rational(-2), Rational(3)});
  CHECK(integrate_poly(kLegendre, p) == IntegralValue(Rational(12), ConstantTag::One));
  // Same p against e^{-x}: 3*2 - 2*1 + 5 = 9.
  CHECK(integrate_poly(kLaguerre, p) == IntegralValue(Rational(9), ConstantTag::One));
  CHECK(integrate_poly(kHermite, Poly()).is_zero());
}

TEST_CASE("filter integral: frozen reference values") {
  CHECK(filter_integral(kLegendre, 3) == IntegralValue(Rational(2), ConstantTag::One));
  CHECK(filter_integral(kLegendre, 2) == IntegralValue(Rational(3, 2), ConstantTag::One));
  CHECK(filter_integral(kLaguerre, 2) == IntegralValue(Rational(5, 2), ConstantTag::One));
  CHECK(filter_integral(kHermite, 2) == IntegralValue(Rational(8), ConstantTag::SqrtPi));
  CHECK(filter_integral(kChebT, 5) == IntegralValue(Rational(5), ConstantTag::Pi));
  CHECK(filter_integral(kChebU, 4) == IntegralValue(Rational(4), ConstantTag::Pi));
  CHECK(filter_integral(kChebU, 5) == IntegralValue(Rational(6), ConstantTag::Pi));
  for (const auto& fam : all_families()) CHECK(filter_integral(fam, 0).is_zero());
}

TEST_CASE("legendre odd orders always integrate to 2") {
  for (int n = 1; n <= 41; n += 2)
    CHECK(filter_integral(kLegendre, n) == IntegralValue(Rational(2), ConstantTag::One));
}

TEST_CASE("three routes agree: expansion, closed form, recurrence") {
  for (const auto& fam : all_families()) {
    CAPTURE(fam.to_string());
    PolyFamily ctx(fam);
    for (int n = 0; n <= 24; ++n) {
      IntegralValue direct = filter_integral(ctx, n);
      CHECK(direct == closed_form(fam, n));
      CHECK(direct == closed_form_via_recurrence(fam, n));
    }
  }
}

TEST_CASE("hermite even integrals renormalize onto the central-binomial form") {
  // With I_{2m} = c_m sqrt(pi), the ratio J_m = c_m / (2^{2m+1} (2m)!) obeys
  // (2m+2) J_{m+1} = (2m+1) J_m + 1 and equals 1 - binom(2m, m) / 4^m.
  Rational j(0);
  for (int m = 0; m <= 40; ++m) {
    Rational direct = filter_integral(kHermite, 2 * m).coefficient() /
                      Rational(pow2(2 * static_cast<unsigned long>(m) + 1) *
                               factorial(2 * static_cast<unsigned long>(m)));
    CHECK(j == direct);
    CHECK(j == Rational(1) - binomial(2 * m, m) / Rational(pow2(2 * static_cast<unsigned long>(m))));
    j = (Rational(2 * m + 1) * j + Rational(1)) / Rational(2 * m + 2);
  }
}

TEST_CASE("laguerre identity suite holds") {
  for (int n : {1, 2, 3, 5, 8, 13, 21, 34}) {
    VerificationReport rep = laguerre_identities(n);
    CAPTURE(n);
    CHECK(rep.all_pass());
  }
  CHECK_THROWS_AS(laguerre_identities(0), InvalidParameter);
}

TEST_CASE("verification report plumbing") {
  VerificationReport rep;
  rep.add("match", "a", "a");
  CHECK(rep.all_pass());
  rep.add("mismatch", "a", "b");
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.items.size() == 2);
  CHECK(rep.items[1].pass == false);
}

TEST_CASE("family-level verification passes for every family") {
  for (const auto& fam : all_families()) {
    CAPTURE(fam.to_string());
    CHECK(verify_family(fam, 12).all_pass());
  }
}

TEST_CASE("integrals from different weights refuse to mix") {
  CHECK_THROWS_AS(weight_moment(kHermite, 0) + weight_moment(kLegendre, 0), TagMismatch);
}

}  // TEST_SUITE
