#include "filtint/families.hpp"

#include <sstream>

#include "filtint/errors.hpp"

namespace filtint {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Legendre: return "legendre";
    case FamilyKind::Hermite: return "hermite";
    case FamilyKind::ChebyshevT: return "chebyshev_t";
    case FamilyKind::ChebyshevU: return "chebyshev_u";
    case FamilyKind::Laguerre: return "laguerre";
    case FamilyKind::Gegenbauer: return "gegenbauer";
  }
  throw InvalidParameter("unknown family kind");
}

FamilyKind parse_family(const std::string& name) {
  if (name == "legendre") return FamilyKind::Legendre;
  if (name == "hermite") return FamilyKind::Hermite;
  if (name == "chebyshev_t") return FamilyKind::ChebyshevT;
  if (name == "chebyshev_u") return FamilyKind::ChebyshevU;
  if (name == "laguerre") return FamilyKind::Laguerre;
  if (name == "gegenbauer") return FamilyKind::Gegenbauer;
  throw InvalidParameter("unknown family name: " + name);
}

std::string tag_name(ConstantTag tag) {
  switch (tag) {
    case ConstantTag::One: return "one";
    case ConstantTag::Pi: return "pi";
    case ConstantTag::SqrtPi: return "sqrt_pi";
    case ConstantTag::Mu0: return "mu0";
  }
  throw InvalidParameter("unknown constant tag");
}

IntegralValue operator+(const IntegralValue& a, const IntegralValue& b) {
  if (a.tag_ == b.tag_) return {a.coeff_ + b.coeff_, a.tag_};
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  throw TagMismatch("cannot add " + tag_name(a.tag_) + " and " + tag_name(b.tag_) + " values");
}

std::string IntegralValue::to_string() const {
  if (tag_ == ConstantTag::One || is_zero()) return coeff_.to_string();
  return coeff_.to_string() + " * " + tag_name(tag_);
}

Family::Family(FamilyKind kind) : kind_(kind) {
  if (kind == FamilyKind::Gegenbauer)
    throw InvalidParameter("gegenbauer needs a parameter a");
}

Family::Family(FamilyKind kind, const Rational& a) : kind_(kind), a_(a) {
  if (kind != FamilyKind::Gegenbauer)
    throw InvalidParameter(family_name(kind) + " takes no parameter");
  if (!(a > Rational(-1, 2)) || a.is_zero())
    throw InvalidParameter("gegenbauer parameter must satisfy a > -1/2 and a != 0, got " +
                           a.to_string());
}

const Rational& Family::param() const {
  if (!a_) throw InvalidParameter(family_name(kind_) + " has no parameter");
  return *a_;
}

ConstantTag Family::tag() const {
  switch (kind_) {
    case FamilyKind::Legendre:
    case FamilyKind::Laguerre: return ConstantTag::One;
    case FamilyKind::Hermite: return ConstantTag::SqrtPi;
    case FamilyKind::ChebyshevT:
    case FamilyKind::ChebyshevU: return ConstantTag::Pi;
    case FamilyKind::Gegenbauer: return ConstantTag::Mu0;
  }
  throw InvalidParameter("unknown family kind");
}

std::string Family::to_string() const {
  if (a_) return family_name(kind_) + "(a=" + a_->to_string() + ")";
  return family_name(kind_);
}

PolyFamily::PolyFamily(Family family) : family_(std::move(family)) {}

namespace {

void require_index(int n) {
  if (n < 0) throw InvalidParameter("polynomial index must be >= 0");
}

Poly laguerre_sum(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial(static_cast<long>(n), static_cast<long>(k)) /
                    Rational(factorial(static_cast<unsigned long>(k)));
    c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? term : -term;
  }
  return Poly(std::move(c));
}

}  // namespace

RecurrenceCoeffs PolyFamily::recurrence(int k) const {
  require_index(k);
  Rational kk(static_cast<long>(k));
  Rational k1 = kk + Rational(1);
  switch (family_.kind()) {
    case FamilyKind::Legendre:
      return {(Rational(2) * kk + Rational(1)) / k1, Rational(0), kk / k1};
    case FamilyKind::Hermite:
      return {Rational(2), Rational(0), Rational(2) * kk};
    case FamilyKind::ChebyshevT:
      return {k == 0 ? Rational(1) : Rational(2), Rational(0), Rational(1)};
    case FamilyKind::ChebyshevU:
      return {Rational(2), Rational(0), Rational(1)};
    case FamilyKind::Laguerre:
      return {Rational(-1) / k1, (Rational(2) * kk + Rational(1)) / k1, kk / k1};
    case FamilyKind::Gegenbauer: {
      const Rational& a = family_.param();
      return {Rational(2) * (kk + a) / k1, Rational(0), (kk + Rational(2) * a - Rational(1)) / k1};
    }
  }
  throw InvalidParameter("unknown family kind");
}

const Poly& PolyFamily::generate(int n) {
  require_index(n);
  if (memo_.empty()) memo_.push_back(Poly(Rational(1)));
  while (static_cast<int>(memo_.size()) <= n) {
    int k = static_cast<int>(memo_.size()) - 1;
    if (family_.kind() == FamilyKind::Laguerre) {
      memo_.push_back(laguerre_sum(k + 1));
      continue;
    }
    RecurrenceCoeffs rc = recurrence(k);
    Poly step = Poly::monomial(1, rc.A) + Poly(rc.B);
    Poly next = step * memo_.back();
    if (k >= 1) next = next - memo_[static_cast<std::size_t>(k) - 1].scaled(rc.C);
    memo_.push_back(std::move(next));
  }
  return memo_[static_cast<std::size_t>(n)];
}

Rational PolyFamily::value_at_zero(int n) const {
  require_index(n);
  switch (family_.kind()) {
    case FamilyKind::Laguerre:
      return Rational(1);
    case FamilyKind::Legendre: {
      if (n % 2 == 1) return Rational(0);
      long m = n / 2;
      Rational v = binomial(2 * m, m) / Rational(pow2(static_cast<unsigned long>(2 * m)));
      return (m % 2 == 0) ? v : -v;
    }
    case FamilyKind::Hermite: {
      if (n % 2 == 1) return Rational(0);
      long m = n / 2;
      Rational v(factorial(static_cast<unsigned long>(n)),
                 factorial(static_cast<unsigned long>(m)));
      return (m % 2 == 0) ? v : -v;
    }
    case FamilyKind::ChebyshevT:
    case FamilyKind::ChebyshevU: {
      if (n % 2 == 1) return Rational(0);
      return (n / 2) % 2 == 0 ? Rational(1) : Rational(-1);
    }
    case FamilyKind::Gegenbauer: {
      if (n % 2 == 1) return Rational(0);
      long m = n / 2;
      Rational v = pochhammer(family_.param(), static_cast<unsigned long>(m)) /
                   Rational(factorial(static_cast<unsigned long>(m)));
      return (m % 2 == 0) ? v : -v;
    }
  }
  throw InvalidParameter("unknown family kind");
}

IntegralValue PolyFamily::norm_constant(int n) const {
  require_index(n);
  switch (family_.kind()) {
    case FamilyKind::Legendre:
      return {Rational(2, 2 * static_cast<long>(n) + 1), ConstantTag::One};
    case FamilyKind::Hermite:
      return {Rational(pow2(static_cast<unsigned long>(n)) *
                       factorial(static_cast<unsigned long>(n))),
              ConstantTag::SqrtPi};
    case FamilyKind::ChebyshevT:
      return {n == 0 ? Rational(1) : Rational(1, 2), ConstantTag::Pi};
    case FamilyKind::ChebyshevU:
      return {Rational(1, 2), ConstantTag::Pi};
    case FamilyKind::Laguerre:
      return {Rational(1), ConstantTag::One};
    case FamilyKind::Gegenbauer: {
      const Rational& a = family_.param();
      Rational v = a * pochhammer(Rational(2) * a, static_cast<unsigned long>(n)) /
                   (Rational(factorial(static_cast<unsigned long>(n))) *
                    (Rational(static_cast<long>(n)) + a));
      return {v, ConstantTag::Mu0};
    }
  }
  throw InvalidParameter("unknown family kind");
}

}  // namespace filtint
