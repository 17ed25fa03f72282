#include "filtint/gegenbauer_x.hpp"

#include <algorithm>
#include <utility>

#include "filtint/errors.hpp"

namespace filtint {

namespace {

void require_index(int n) {
  if (n < 0) throw InvalidParameter("index must be >= 0");
}

Poly linear(const Rational& constant) {
  return Poly(std::vector<Rational>{constant, Rational(1)});
}

}  // namespace

ParamPoly pochhammer_poly(const Rational& offset, int n) {
  require_index(n);
  Poly prod((Rational(1)));
  for (int i = 0; i < n; ++i) prod = prod * linear(offset + Rational(i));
  return prod;
}

ParamPoly xn_closed(int n) {
  require_index(n);
  if (n == 0) return Poly();
  Poly rising_half = pochhammer_poly(Rational(1, 2), n).scaled(
      Rational(pow2(2 * static_cast<unsigned long>(n) - 1)));
  Poly rising_zero =
      pochhammer_poly(Rational(0), n).scaled(binomial(2 * static_cast<long>(n) - 1, n - 1));
  return rising_half - rising_zero;
}

ParamPoly xn_recurrence_first(int n) {
  require_index(n);
  Poly x;
  for (long k = 1; k <= n; ++k) {
    Poly carried = (linear(Rational(k - 1)) * x).scaled(Rational(2 * (2 * k - 1), k));
    Poly fresh = (linear(Rational(2 * k - 1)) * pochhammer_poly(Rational(1, 2), static_cast<int>(k) - 1))
                     .scaled(Rational(pow2(2 * static_cast<unsigned long>(k) - 2), k));
    x = carried + fresh;
  }
  return x;
}

ParamPoly xn_recurrence_second(int n) {
  require_index(n);
  if (n == 0) return Poly();
  Poly prev2;                                             // X_0
  Poly prev1(std::vector<Rational>{Rational(1), Rational(1)});  // X_1 = a + 1
  for (long k = 2; k <= n; ++k) {
    Poly f1 = linear(Rational(2 * k - 2));
    Poly f2(std::vector<Rational>{Rational(4 * k * k - 8 * k + 3), Rational(4 * k - 3)});
    Poly g1 = linear(Rational(k - 2));
    Poly g2(std::vector<Rational>{Rational(2 * k - 3), Rational(2)});
    Poly g3 = linear(Rational(2 * k - 1));
    Poly rhs = (f1 * f2 * prev1).scaled(Rational(2)) -
               (g1 * g2 * g3 * prev2).scaled(Rational(4 * (2 * k - 3)));
    Poly divisor = linear(Rational(2 * k - 3)).scaled(Rational(k));
    Poly next = exact_divide(rhs, divisor);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

ParamPoly xn_sum(int n) {
  require_index(n);
  if (n == 0) return Poly();
  Poly total;
  for (long k = 1; k <= n; ++k) {
    Rational coef = Rational(pow2(2 * static_cast<unsigned long>(k))) /
                    (Rational(2 * k - 1) * binomial(2 * k - 2, k - 1));
    Poly term = linear(Rational(2 * k - 1)) *
                pochhammer_poly(Rational(1, 2), static_cast<int>(k) - 1) *
                pochhammer_poly(Rational(k), n - static_cast<int>(k));
    total = total + term.scaled(coef);
  }
  return total.scaled(binomial(2 * static_cast<long>(n), n) / Rational(8));
}

std::vector<Rational> xn_coefficients_rho(int n) {
  require_index(n);
  if (n == 0) return {};
  std::vector<Integer> c = stirling1_row(static_cast<unsigned long>(n));
  Rational front(pow2(2 * static_cast<unsigned long>(n) - 1));
  Rational back = binomial(2 * static_cast<long>(n) - 1, n - 1);
  std::vector<Rational> rho;
  rho.reserve(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    Rational s(0);
    for (int j = r; j <= n; ++j)
      s += Rational(c[static_cast<std::size_t>(j)]) * binomial(static_cast<long>(j), r) /
           Rational(pow2(static_cast<unsigned long>(j - r)));
    rho.push_back(front * s - back * Rational(c[static_cast<std::size_t>(r)]));
  }
  return rho;
}

Rational gamma_ratio_direct(int n, const Rational& a) {
  Family fam(FamilyKind::Gegenbauer, a);
  return filter_integral(fam, n).coefficient();
}

Rational gamma_closed_ratio(int n, const Rational& a) {
  require_index(n);
  if (n == 0) return Rational(0);
  Rational nfact(factorial(static_cast<unsigned long>(n)));
  if (n % 2 == 1) {
    unsigned long m = static_cast<unsigned long>(n - 1) / 2;
    return Rational(pow2(2 * m + 2)) * a * pochhammer(a + Rational(1, 2), m) *
           pochhammer(a, m + 1) / nfact;
  }
  int m = n / 2;
  return Rational(4) * a * pochhammer(a, static_cast<unsigned long>(m)) *
         xn_closed(m).evaluate(a) / nfact;
}

std::vector<ParamPoly> gegenbauer_symbolic(int n) {
  require_index(n);
  std::vector<ParamPoly> prev{Poly((Rational(1)))};
  if (n == 0) return prev;
  std::vector<ParamPoly> cur{Poly(), Poly(std::vector<Rational>{Rational(0), Rational(2)})};
  for (int k = 2; k <= n; ++k) {
    Poly f1(std::vector<Rational>{Rational(2 * (static_cast<long>(k) - 1)), Rational(2)});
    Poly f2(std::vector<Rational>{Rational(static_cast<long>(k) - 2), Rational(2)});
    std::vector<ParamPoly> next(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
      Poly acc;
      if (i >= 1) acc = f1 * cur[static_cast<std::size_t>(i) - 1];
      if (i <= k - 2) acc = acc - f2 * prev[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] = acc.scaled(Rational(1, k));
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

VerificationReport verify_gegenbauer_symbolic(int n) {
  require_index(n);
  VerificationReport rep;
  rep.subject = "gegenbauer with symbolic parameter, n=" + std::to_string(n);
  std::vector<ParamPoly> sym = gegenbauer_symbolic(n);
  for (long s = 1; s <= 2 * n + 1; ++s) {
    Rational a(s);
    Family fam(FamilyKind::Gegenbauer, a);
    PolyFamily ctx(fam);
    std::vector<Rational> evaluated;
    evaluated.reserve(sym.size());
    for (const auto& pp : sym) evaluated.push_back(pp.evaluate(a));
    rep.add("coefficients at a=" + std::to_string(s), ctx.generate(n).to_string(),
            Poly(std::move(evaluated)).to_string());
    rep.add("integral ratio at a=" + std::to_string(s),
            gamma_closed_ratio(n, a).to_string(), gamma_ratio_direct(n, a).to_string());
  }
  return rep;
}

VerificationReport xn_properties(int n, bool certify_roots) {
  if (n < 1) throw InvalidParameter("property checks need n >= 1");
  VerificationReport rep;
  rep.subject = "X polynomial properties, n=" + std::to_string(n);
  Poly x = xn_closed(n);

  rep.add("value at a=-" + std::to_string(n), "0/1",
          x.evaluate(Rational(-static_cast<long>(n))).to_string());
  rep.add("constant term",
          Rational(factorial(2 * static_cast<unsigned long>(n)),
                   Integer(2) * factorial(static_cast<unsigned long>(n)))
              .to_string(),
          x.coeff(0).to_string());
  rep.add("leading coefficient",
          (Rational(pow2(2 * static_cast<unsigned long>(n) - 1)) -
           binomial(2 * static_cast<long>(n), n) / Rational(2))
              .to_string(),
          x.leading().to_string());

  Rational scale(pow2(2 * static_cast<unsigned long>(n) - 1));
  for (long k = 1; k <= n - 1; ++k) {
    Rational expected = scale * pochhammer(Rational(1, 2), static_cast<unsigned long>(k)) *
                        pochhammer(Rational(1, 2), static_cast<unsigned long>(n - k));
    if (k % 2 == 1) expected = -expected;
    rep.add("value at a=-" + std::to_string(k), expected.to_string(),
            x.evaluate(Rational(-k)).to_string());
  }
  for (long k = 1; k <= n - 1; ++k) {
    Rational rhs = x.evaluate(Rational(-k));
    if (n % 2 == 1) rhs = -rhs;
    rep.add("reflection at k=" + std::to_string(k), rhs.to_string(),
            x.evaluate(Rational(k - n)).to_string());
  }

  if (certify_roots) {
    std::vector<RootBox> boxes = isolate_roots(x);
    rep.add("distinct real roots", std::to_string(n), std::to_string(boxes.size()));
    int inside = sturm_count(x, Rational(-(static_cast<long>(n) + 1)), Rational(0));
    rep.add("roots inside (-(n+1), 0)", std::to_string(n), std::to_string(inside));
  }
  return rep;
}

namespace {

Rational wz_f(long n, long k) {
  Rational b = binomial(n, k);
  return Rational(2 * k - 1 - n) * binomial(2 * n - 1, 2 * k - 2) /
         (Rational(k * k * (2 * k - 1)) * b * b);
}

Rational wz_g(long n, long k) {
  Rational b = binomial(n, k);
  return Rational(k - n - 1) * binomial(2 * n - 1, 2 * k - 2) / (Rational(k * k) * b * b);
}

}  // namespace

VerificationReport wz_check(int n) {
  if (n < 1) throw InvalidParameter("certificate check needs n >= 1");
  VerificationReport rep;
  rep.subject = "telescoping certificate, n=" + std::to_string(n);
  long nn = n;
  for (long k = 1; k <= nn - 1; ++k)
    rep.add("difference identity at k=" + std::to_string(k),
            (wz_g(nn, k + 1) - wz_g(nn, k)).to_string(), wz_f(nn, k).to_string());
  Rational sum(0);
  for (long k = 1; k <= nn; ++k) sum += wz_f(nn, k);
  rep.add("full sum", "0/1", sum.to_string());
  rep.add("left boundary value", Rational(-1, nn).to_string(), wz_g(nn, 1).to_string());
  rep.add("right boundary value", Rational(-1, nn).to_string(),
          (wz_g(nn, nn) + wz_f(nn, nn)).to_string());
  return rep;
}

namespace {

bool boxes_overlap(const RootBox& a, const RootBox& b) {
  return a.lo < b.hi && b.lo < a.hi;
}

bool any_overlap(const std::vector<RootBox>& xs, const std::vector<RootBox>& ys) {
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (boxes_overlap(x, y)) return true;
  return false;
}

}  // namespace

InterlacingResult interlacing_check(int n) {
  if (n < 1) throw InvalidParameter("interlacing check needs n >= 1");
  InterlacingResult res;
  Poly a = xn_closed(n);
  Poly b = xn_closed(n + 1);
  res.lower = isolate_roots(a);
  res.upper = isolate_roots(b);
  if (poly_gcd(a, b).degree() > 0) return res;  // shared root: not strictly interlaced
  if (static_cast<int>(res.lower.size()) != n ||
      static_cast<int>(res.upper.size()) != n + 1)
    return res;

  Rational width(1, 1024);
  int rounds = 0;
  while (any_overlap(res.lower, res.upper)) {
    if (++rounds > 128) throw ConvergenceFailure("root boxes failed to separate");
    width = width / Rational(2);
    for (auto& box : res.lower) box = refine_root_box(a, box, width);
    for (auto& box : res.upper) box = refine_root_box(b, box, width);
  }

  // Disjoint boxes sort totally; interlacing means the merged sequence
  // alternates and both extremes come from X_{n+1}.
  struct Tagged {
    const RootBox* box;
    bool from_upper;
  };
  std::vector<Tagged> merged;
  for (const auto& box : res.lower) merged.push_back({&box, false});
  for (const auto& box : res.upper) merged.push_back({&box, true});
  std::sort(merged.begin(), merged.end(),
            [](const Tagged& p, const Tagged& q) { return p.box->lo < q.box->lo; });
  bool ok = true;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    bool want_upper = (i % 2 == 0);
    if (merged[i].from_upper != want_upper) ok = false;
  }
  res.interlaced = ok;
  return res;
}

PolyModP xn_mod_prime(int n, const PrimeModulus& q) {
  return reduce_mod_prime(xn_closed(n), q);
}

}  // namespace filtint
