#include "filtint/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "filtint/errors.hpp"

namespace filtint {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw InvalidParameter("monomial degree must be >= 0");
  if (coeff.is_zero()) return Poly();
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  Poly p;
  p.c_ = std::move(c);
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw InvalidParameter("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Poly Poly::scaled(const Rational& s) const {
  if (s.is_zero()) return Poly();
  Poly r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly();
  Poly r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
  r.normalize();
  return r;
}

Poly Poly::shifted_up(int k) const {
  if (k < 0) throw InvalidParameter("shift amount must be >= 0");
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::deflate_at_zero() const {
  if (is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.begin() + 1, c_.end());
  r.normalize();
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0/1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    out << c_[i].to_string();
    if (i >= 1) {
      out << "*" << var;
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

DivMod divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw InvalidParameter("division by the zero polynomial");
  if (p.degree() < d.degree()) return {Poly(), p};
  std::vector<Rational> rem(p.coefficients());
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - d.degree()) + 1, Rational(0));
  const Rational& lead = d.leading();
  for (int k = p.degree() - d.degree(); k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + d.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int i = 0; i <= d.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= f * d.coeff(i);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_divide(const Poly& p, const Poly& d) {
  DivMod qr = divmod(p, d);
  if (!qr.remainder.is_zero()) throw NonZeroRemainder("polynomial division left a remainder");
  return qr.quotient;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1);
  for (const auto& a : p.coefficients())
    if (!a.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.denominator().get_mpz_t());
  Integer num_gcd(0);
  for (const auto& a : p.coefficients()) {
    if (a.is_zero()) continue;
    Integer scaled = a.numerator() * (den_lcm / a.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p.scaled(Rational(den_lcm, num_gcd));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly f = a, g = b;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Poly r = divmod(f, g).remainder;
    f = g;
    g = primitive_part(r);
  }
  if (f.is_zero()) return f;
  Poly prim = primitive_part(f);
  if (prim.leading().sign() < 0) prim = -prim;
  return prim;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_divide(p, g);
}

Rational cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw InvalidParameter("root bound of the zero polynomial");
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs());
  return Rational(1) + m / p.leading().abs();
}

namespace {

/// Sturm chain of a squarefree polynomial. Elements are reduced to their
/// primitive parts; primitive_part scales by a positive rational, so the
/// sign pattern the chain depends on is untouched.
class SturmChain {
 public:
  explicit SturmChain(const Poly& squarefree) {
    Poly f = primitive_part(squarefree);
    chain_.push_back(f);
    if (f.degree() >= 1) {
      chain_.push_back(primitive_part(f.derivative()));
      while (chain_.back().degree() >= 1) {
        Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (r.is_zero()) break;
        chain_.push_back(primitive_part(-r));
      }
    }
  }

  bool is_root(const Rational& x) const { return chain_[0].evaluate(x).is_zero(); }

  int variations(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& s : chain_) {
      int sg = s.evaluate(x).sign();
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
    return v;
  }

  /// Distinct roots in (lo, hi]; endpoints must not be roots.
  int count(const Rational& lo, const Rational& hi) const {
    return variations(lo) - variations(hi);
  }

 private:
  std::vector<Poly> chain_;
};

/// Split point strictly inside (lo, hi) at which s does not vanish. Tries
/// the midpoint first, then other simple fractions of the width.
Rational pick_split(const SturmChain& chain, const Rational& lo, const Rational& hi) {
  Rational width = hi - lo;
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational m = lo + width * Rational(num, den);
      if (!chain.is_root(m)) return m;
    }
  }
}

void subdivide(const SturmChain& chain, const Rational& lo, const Rational& hi,
               const Rational& max_width, std::vector<RootBox>& out) {
  int c = chain.count(lo, hi);
  if (c == 0) return;
  if (c == 1 && hi - lo <= max_width) {
    out.push_back({lo, hi, 1});
    return;
  }
  Rational m = pick_split(chain, lo, hi);
  subdivide(chain, lo, m, max_width, out);
  subdivide(chain, m, hi, max_width, out);
}

}  // namespace

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw InvalidParameter("root counting needs a nonzero polynomial");
  if (!(lo < hi)) throw InvalidParameter("root counting needs lo < hi");
  Poly s = squarefree_part(p);
  SturmChain chain(s);
  if (chain.is_root(lo) || chain.is_root(hi))
    throw BoundaryRoot("interval endpoint is a root");
  return chain.count(lo, hi);
}

std::vector<RootBox> isolate_roots(const Poly& p, const Rational& max_width) {
  if (p.is_zero()) throw InvalidParameter("root isolation needs a nonzero polynomial");
  if (max_width.sign() <= 0) throw InvalidParameter("max_width must be positive");
  Poly s = squarefree_part(p);
  std::vector<RootBox> out;
  if (s.degree() <= 0) return out;
  Rational bound = cauchy_root_bound(s);
  SturmChain chain(s);
  subdivide(chain, -bound, bound, max_width, out);
  return out;
}

RootBox refine_root_box(const Poly& p, RootBox box, const Rational& max_width) {
  if (max_width.sign() <= 0) throw InvalidParameter("max_width must be positive");
  Poly s = squarefree_part(p);
  SturmChain chain(s);
  if (chain.is_root(box.lo) || chain.is_root(box.hi))
    throw BoundaryRoot("box endpoint is a root");
  if (chain.count(box.lo, box.hi) != 1)
    throw InvalidParameter("box does not isolate a single root");
  while (box.hi - box.lo > max_width) {
    Rational m = pick_split(chain, box.lo, box.hi);
    if (chain.count(box.lo, m) == 1)
      box.hi = m;
    else
      box.lo = m;
  }
  box.count = 1;
  return box;
}

PrimeModulus::PrimeModulus(std::uint64_t prime) : q(prime) {
  if (!is_prime(prime)) throw InvalidParameter("modulus must be prime");
}

PolyModP::PolyModP(std::vector<std::uint64_t> residues, PrimeModulus modulus)
    : c_(std::move(residues)), q_(modulus.q) {
  for (auto& r : c_) r %= q_;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyModP::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::string PolyModP::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    out << c_[i];
    if (i >= 1) {
      out << "*" << var;
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue_u64(const Integer& z, std::uint64_t q) {
  Integer m, modulus(static_cast<unsigned long>(q));
  mpz_mod(m.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  return m.get_ui();
}

}  // namespace

PolyModP reduce_mod_prime(const Poly& p, const PrimeModulus& q) {
  std::vector<std::uint64_t> res;
  res.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) {
    std::uint64_t den = residue_u64(a.denominator(), q.q);
    if (den == 0)
      throw DenominatorNotInvertible("coefficient denominator divisible by the modulus");
    std::uint64_t num = residue_u64(a.numerator(), q.q);
    res.push_back(mulmod_u64(num, powmod_u64(den, q.q - 2, q.q), q.q));
  }
  return PolyModP(std::move(res), q);
}

}  // namespace filtint
