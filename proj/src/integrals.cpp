#include "filtint/integrals.hpp"

#include "filtint/errors.hpp"
#include "filtint/gegenbauer_x.hpp"

namespace filtint {

bool VerificationReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, std::string expected, std::string actual) {
  bool ok = expected == actual;
  items.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

namespace {

void require_index(int n) {
  if (n < 0) throw InvalidParameter("index must be >= 0");
}

/// Central binomial ratio binom(n, n/2) / 2^n for even n, 0 for odd n.
Rational beta_central(int n) {
  if (n % 2 == 1) return Rational(0);
  return binomial(n, n / 2) / Rational(pow2(static_cast<unsigned long>(n)));
}

}  // namespace

IntegralValue weight_moment(const Family& family, int m) {
  require_index(m);
  if (family.kind() == FamilyKind::Laguerre)
    return {Rational(factorial(static_cast<unsigned long>(m))), ConstantTag::One};
  if (m % 2 == 1) return {Rational(0), family.tag()};
  long j = m / 2;
  switch (family.kind()) {
    case FamilyKind::Legendre:
      return {Rational(2, static_cast<long>(m) + 1), ConstantTag::One};
    case FamilyKind::Hermite:
      return {Rational(factorial(static_cast<unsigned long>(m)),
                       pow2(static_cast<unsigned long>(2 * j)) *
                           factorial(static_cast<unsigned long>(j))),
              ConstantTag::SqrtPi};
    case FamilyKind::ChebyshevT:
      return {binomial(2 * j, j) / Rational(pow2(static_cast<unsigned long>(2 * j))),
              ConstantTag::Pi};
    case FamilyKind::ChebyshevU:
      return {binomial(2 * j, j) /
                  Rational(Integer(2) * pow2(static_cast<unsigned long>(2 * j)) * (j + 1)),
              ConstantTag::Pi};
    case FamilyKind::Gegenbauer:
      return {pochhammer(Rational(1, 2), static_cast<unsigned long>(j)) /
                  pochhammer(family.param() + Rational(1), static_cast<unsigned long>(j)),
              ConstantTag::Mu0};
    default:
      throw InvalidParameter("unknown family kind");
  }
}

IntegralValue integrate_poly(const Family& family, const Poly& p) {
  IntegralValue acc(Rational(0), family.tag());
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    acc = acc + p.coeff(i) * weight_moment(family, i);
  }
  return acc;
}

IntegralValue filter_integral(PolyFamily& ctx, int n) {
  require_index(n);
  Poly deflated = ctx.generate(n).deflate_at_zero();
  return integrate_poly(ctx.family(), deflated.square());
}

IntegralValue filter_integral(const Family& family, int n) {
  PolyFamily ctx(family);
  return filter_integral(ctx, n);
}

IntegralValue closed_form(const Family& family, int n) {
  require_index(n);
  Rational nn(static_cast<long>(n));
  switch (family.kind()) {
    case FamilyKind::Legendre: {
      Rational b = beta_central(n);
      return {Rational(2) * (Rational(1) - b * b), ConstantTag::One};
    }
    case FamilyKind::Hermite: {
      Rational b = beta_central(n);
      return {Rational(factorial(static_cast<unsigned long>(n)) *
                       pow2(static_cast<unsigned long>(n) + 1)) *
                  (Rational(1) - b),
              ConstantTag::SqrtPi};
    }
    case FamilyKind::ChebyshevT:
      return {nn, ConstantTag::Pi};
    case FamilyKind::ChebyshevU:
      return {n % 2 == 0 ? nn : nn + Rational(1), ConstantTag::Pi};
    case FamilyKind::Laguerre:
      return {Rational(2) * nn - harmonic(static_cast<unsigned long>(n)), ConstantTag::One};
    case FamilyKind::Gegenbauer:
      return {gamma_closed_ratio(n, family.param()), ConstantTag::Mu0};
  }
  throw InvalidParameter("unknown family kind");
}

namespace {

Rational legendre_recurrence_route(int n) {
  if (n == 0) return Rational(0);
  if (n % 2 == 1) {
    // n = 2m-1; c_1 = 2, (2i+1)^2 c_{i+1} = 2(4i+1) + 4i^2 c_i
    int m = (n + 1) / 2;
    Rational c(2);
    for (long i = 1; i < m; ++i)
      c = (Rational(2) * Rational(4 * i + 1) + Rational(4 * i * i) * c) /
          Rational((2 * i + 1) * (2 * i + 1));
    return c;
  }
  // n = 2m; w_0 = 0, 4(i+1)^2 w_{i+1} = 2(4i+3) + (2i+1)^2 w_i
  int m = n / 2;
  Rational w(0);
  for (long i = 0; i < m; ++i)
    w = (Rational(2) * Rational(4 * i + 3) + Rational((2 * i + 1) * (2 * i + 1)) * w) /
        Rational(4 * (i + 1) * (i + 1));
  return w;
}

Rational hermite_recurrence_route(int n) {
  if (n % 2 == 0) {
    // I_0 = 0, I_{2i+2} = (2i+1)! 2^{2i+3} + 4(2i+1)^2 I_{2i}
    int m = n / 2;
    Rational v(0);
    for (long i = 0; i < m; ++i)
      v = Rational(factorial(static_cast<unsigned long>(2 * i + 1)) *
                   pow2(static_cast<unsigned long>(2 * i + 3))) +
          Rational(4 * (2 * i + 1) * (2 * i + 1)) * v;
    return v;
  }
  // I_1 = 4, I_{2i+1} = (2i)! 2^{2i+2} + 16 i^2 I_{2i-1}
  int m = (n - 1) / 2;
  Rational v(4);
  for (long i = 1; i <= m; ++i)
    v = Rational(factorial(static_cast<unsigned long>(2 * i)) *
                 pow2(static_cast<unsigned long>(2 * i + 2))) +
        Rational(16 * i * i) * v;
  return v;
}

Rational chebyshev_recurrence_route(int n, bool second_kind) {
  // a_{k+1} = 2 + a_{k-1}, in units of pi
  Rational prev(0);
  Rational cur = second_kind ? Rational(2) : Rational(1);
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Rational next = Rational(2) + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational laguerre_inner_sum(int n, int k) {
  Rational b(0);
  for (long j = 1; j <= n; ++j) {
    Rational term = binomial(n, j) * binomial(k + j - 2, static_cast<long>(k) - 1) /
                    Rational(j);
    b += (j % 2 == 0) ? term : -term;
  }
  return b;
}

Rational laguerre_assembly_route(int n) {
  Rational total(0);
  for (long k = 1; k <= n; ++k) {
    Rational term = binomial(n, k) * laguerre_inner_sum(n, static_cast<int>(k)) / Rational(k);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

Rational gegenbauer_recurrence_route(int n, const Rational& a) {
  // g_0 = 0, g_1 = 4a^2,
  // g_k = 4a(k+a-1)(2a)_{k-1} / (k * k!) + ((k+2a-2)/k)^2 g_{k-2}
  if (n == 0) return Rational(0);
  Rational g_even(0);
  Rational g_odd = Rational(4) * a * a;
  for (long k = 2; k <= n; ++k) {
    Rational kk(k);
    Rational head = Rational(4) * a * (kk + a - Rational(1)) *
                    pochhammer(Rational(2) * a, static_cast<unsigned long>(k - 1)) /
                    (kk * Rational(factorial(static_cast<unsigned long>(k))));
    Rational ratio = (kk + Rational(2) * a - Rational(2)) / kk;
    Rational& slot = (k % 2 == 0) ? g_even : g_odd;
    slot = head + ratio * ratio * slot;
  }
  return (n % 2 == 0) ? g_even : g_odd;
}

}  // namespace

IntegralValue closed_form_via_recurrence(const Family& family, int n) {
  require_index(n);
  switch (family.kind()) {
    case FamilyKind::Legendre:
      return {legendre_recurrence_route(n), ConstantTag::One};
    case FamilyKind::Hermite:
      return {hermite_recurrence_route(n), ConstantTag::SqrtPi};
    case FamilyKind::ChebyshevT:
      return {chebyshev_recurrence_route(n, false), ConstantTag::Pi};
    case FamilyKind::ChebyshevU:
      return {chebyshev_recurrence_route(n, true), ConstantTag::Pi};
    case FamilyKind::Laguerre:
      return {laguerre_assembly_route(n), ConstantTag::One};
    case FamilyKind::Gegenbauer:
      return {gegenbauer_recurrence_route(n, family.param()), ConstantTag::Mu0};
  }
  throw InvalidParameter("unknown family kind");
}

VerificationReport laguerre_identities(int n) {
  if (n < 1) throw InvalidParameter("identity checks need n >= 1");
  VerificationReport rep;
  rep.subject = "laguerre identities, n=" + std::to_string(n);

  Rational alt_km1(0), alt_k(0);
  for (long k = 2; k <= n; ++k) {
    Rational t1 = binomial(n, k) / Rational(k - 1);
    Rational t2 = binomial(n, k) / Rational(k);
    alt_km1 += (k % 2 == 0) ? t1 : -t1;
    alt_k += (k % 2 == 0) ? t2 : -t2;
  }
  Rational h = harmonic(static_cast<unsigned long>(n));
  Rational nn(static_cast<long>(n));
  rep.add("alternating sum with 1/(k-1) weights", (nn * (h - Rational(1))).to_string(),
          alt_km1.to_string());
  rep.add("alternating sum with 1/k weights", (nn - h).to_string(), alt_k.to_string());

  rep.add("inner sum at k=1", (-h).to_string(), laguerre_inner_sum(n, 1).to_string());
  for (int k = 2; k <= n; ++k)
    rep.add("inner sum at k=" + std::to_string(k), Rational(-1, k - 1).to_string(),
            laguerre_inner_sum(n, k).to_string());

  for (long r = 0; r + 1 <= n; ++r) {
    Rational s(0);
    for (long j = 0; j <= n; ++j) {
      Rational t = binomial(n, j) * binomial(r + j, j);
      s += (j % 2 == 0) ? t : -t;
    }
    rep.add("vanishing cross sum at r=" + std::to_string(r), "0/1", s.to_string());
  }

  rep.add("assembled filter integral", (Rational(2) * nn - h).to_string(),
          laguerre_assembly_route(n).to_string());
  return rep;
}

VerificationReport verify_family(const Family& family, int n_max) {
  require_index(n_max);
  VerificationReport rep;
  rep.subject = family.to_string();
  PolyFamily ctx(family);
  for (int n = 0; n <= n_max; ++n) {
    IntegralValue closed = closed_form(family, n);
    rep.add("n=" + std::to_string(n) + ": expanded integral vs closed form",
            closed.to_string(), filter_integral(ctx, n).to_string());
    rep.add("n=" + std::to_string(n) + ": recurrence route vs closed form",
            closed.to_string(), closed_form_via_recurrence(family, n).to_string());
    rep.add("n=" + std::to_string(n) + ": value at zero vs closed form",
            ctx.value_at_zero(n).to_string(),
            ctx.generate(n).evaluate(Rational(0)).to_string());
  }
  return rep;
}

}  // namespace filtint
