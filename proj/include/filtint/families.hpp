#ifndef FILTINT_FAMILIES_HPP
#define FILTINT_FAMILIES_HPP

#include <deque>
#include <optional>
#include <string>

#include "filtint/poly.hpp"
#include "filtint/rational.hpp"

namespace filtint {

enum class FamilyKind { Legendre, Hermite, ChebyshevT, ChebyshevU, Laguerre, Gegenbauer };

/// CLI-facing names: legendre, hermite, chebyshev_t, chebyshev_u, laguerre,
/// gegenbauer.
std::string family_name(FamilyKind kind);
FamilyKind parse_family(const std::string& name);

/// Scale constant attached to an exact integral value. mu0 is the total mass
/// of the Gegenbauer weight, integral of (1-x^2)^(a-1/2) over [-1,1].
enum class ConstantTag { One, Pi, SqrtPi, Mu0 };

std::string tag_name(ConstantTag tag);

/// Exact integral value: rational coefficient times one scale constant.
/// Sums across different tags are refused (TagMismatch) unless one side is
/// zero, which adopts the other side's tag.
class IntegralValue {
 public:
  IntegralValue() : coeff_(0), tag_(ConstantTag::One) {}
  IntegralValue(Rational coeff, ConstantTag tag) : coeff_(std::move(coeff)), tag_(tag) {}

  const Rational& coefficient() const { return coeff_; }
  ConstantTag tag() const { return tag_; }
  bool is_zero() const { return coeff_.is_zero(); }

  IntegralValue operator-() const { return {-coeff_, tag_}; }
  friend IntegralValue operator+(const IntegralValue& a, const IntegralValue& b);
  friend IntegralValue operator-(const IntegralValue& a, const IntegralValue& b) {
    return a + (-b);
  }
  friend IntegralValue operator*(const Rational& s, const IntegralValue& v) {
    return {s * v.coeff_, v.tag_};
  }

  friend bool operator==(const IntegralValue& a, const IntegralValue& b) {
    return (a.is_zero() && b.is_zero()) || (a.tag_ == b.tag_ && a.coeff_ == b.coeff_);
  }

  std::string to_string() const;

 private:
  Rational coeff_;
  ConstantTag tag_;
};

/// Family descriptor. Gegenbauer carries its parameter a, which must satisfy
/// a > -1/2 and a != 0; the other kinds carry none.
class Family {
 public:
  explicit Family(FamilyKind kind);
  Family(FamilyKind kind, const Rational& a);

  FamilyKind kind() const { return kind_; }
  /// Gegenbauer parameter; throws InvalidParameter for other kinds.
  const Rational& param() const;
  bool has_param() const { return a_.has_value(); }

  /// Scale constant every weighted integral of this family carries.
  ConstantTag tag() const;

  std::string to_string() const;

 private:
  FamilyKind kind_;
  std::optional<Rational> a_;
};

/// Coefficients of the step p_{k+1}(x) = (A x + B) p_k(x) - C p_{k-1}(x).
struct RecurrenceCoeffs {
  Rational A;
  Rational B;
  Rational C;
};

/// Generator with a memo of the polynomials produced so far.
class PolyFamily {
 public:
  explicit PolyFamily(Family family);

  const Family& family() const { return family_; }

  /// p_n as an explicit polynomial, exact coefficients. The reference stays
  /// valid across later generate calls (the memo only ever grows at the end).
  const Poly& generate(int n);

  /// Recurrence step k -> k+1, for k >= 0 (C is ignored at k = 0).
  RecurrenceCoeffs recurrence(int k) const;

  /// p_n(0) from the closed form, not from the generated polynomial.
  Rational value_at_zero(int n) const;

  /// Squared weighted norm of p_n.
  IntegralValue norm_constant(int n) const;

 private:
  Family family_;
  std::deque<Poly> memo_;
};

}  // namespace filtint

#endif
