#include "filtint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "filtint/errors.hpp"

namespace filtint {

double tag_value(ConstantTag tag, const Family& family) {
  switch (tag) {
    case ConstantTag::One: return 1.0;
    case ConstantTag::Pi: return std::numbers::pi;
    case ConstantTag::SqrtPi: return std::sqrt(std::numbers::pi);
    case ConstantTag::Mu0: {
      double a = family.param().to_double();
      return std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(a + 0.5) -
                      std::lgamma(a + 1.0));
    }
  }
  throw InvalidParameter("unknown constant tag");
}

double numeric_value(const IntegralValue& v, const Family& family) {
  return v.coefficient().to_double() * tag_value(v.tag(), family);
}

namespace {

constexpr int kNewtonBudget = 100;
constexpr double kTol = 1e-15;

/// Recurrence data for the orthonormal sequence q_k = p_k / sqrt(h_k):
///   q_{k+1} = r_k (A_k x + B_k) q_k - s_k C_k q_{k-1},
/// with r_k = sqrt(h_k / h_{k+1}) and s_k = sqrt(h_{k-1} / h_{k+1}).
/// Norm ratios are formed as exact rationals first so that huge h_k (the
/// Hermite ones overflow double well below k = 200) never materialize.
struct OrthonormalRec {
  std::vector<double> A, B, C, r, s;
  double q0 = 0.0;

  OrthonormalRec(const Family& family, int m) {
    PolyFamily ctx(family);
    A.resize(m);
    B.resize(m);
    C.resize(m);
    r.resize(m);
    s.resize(m);
    for (int k = 0; k < m; ++k) {
      RecurrenceCoeffs rc = ctx.recurrence(k);
      A[k] = rc.A.to_double();
      B[k] = rc.B.to_double();
      C[k] = rc.C.to_double();
      Rational hk = ctx.norm_constant(k).coefficient();
      Rational hk1 = ctx.norm_constant(k + 1).coefficient();
      r[k] = std::sqrt((hk / hk1).to_double());
      s[k] = k >= 1
                 ? std::sqrt((ctx.norm_constant(k - 1).coefficient() / hk1).to_double())
                 : 0.0;
    }
    q0 = 1.0 / std::sqrt(numeric_value(ctx.norm_constant(0), family));
  }

  int order() const { return static_cast<int>(A.size()); }

  /// q_m(x) and its derivative; when lower != nullptr it is filled with
  /// q_0(x) .. q_{m-1}(x) for the Christoffel sum.
  void eval(double x, double& qm, double& dqm, std::vector<double>* lower = nullptr) const {
    double q_prev = 0.0, q = q0, dq_prev = 0.0, dq = 0.0;
    if (lower) lower->clear();
    for (int k = 0; k < order(); ++k) {
      if (lower) lower->push_back(q);
      double t = A[k] * x + B[k];
      double q_next = r[k] * t * q - s[k] * C[k] * q_prev;
      double dq_next = r[k] * (A[k] * q + t * dq) - s[k] * C[k] * dq_prev;
      q_prev = q;
      q = q_next;
      dq_prev = dq;
      dq = dq_next;
    }
    qm = q;
    dqm = dq;
  }

  double value(double x) const {
    double v, dv;
    eval(x, v, dv);
    return v;
  }
};

struct Support {
  double lo;
  double hi;
};

Support support_bounds(const Family& family, int m) {
  switch (family.kind()) {
    case FamilyKind::Hermite: {
      double edge = std::sqrt(2.0 * m + 1.0) + 2.0;
      return {-edge, edge};
    }
    case FamilyKind::Laguerre:
      return {0.0, 4.0 * m + 3.0};
    default:
      return {-1.0, 1.0};
  }
}

std::vector<double> initial_guesses(const Family& family, int m) {
  std::vector<double> z(static_cast<std::size_t>(m));
  switch (family.kind()) {
    case FamilyKind::Hermite: {
      // classic asymptotic ladder, largest root first
      double cur = 0.0;
      for (int i = 0; i < m; ++i) {
        if (i == 0)
          cur = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
        else if (i == 1)
          cur -= 1.14 * std::pow(static_cast<double>(m), 0.426) / cur;
        else if (i == 2)
          cur = 1.86 * cur - 0.86 * z[0];
        else if (i == 3)
          cur = 1.91 * cur - 0.91 * z[1];
        else
          cur = 2.0 * cur - z[static_cast<std::size_t>(i) - 2];
        z[static_cast<std::size_t>(i)] = cur;
      }
      break;
    }
    case FamilyKind::Laguerre: {
      double cur = 0.0;
      for (int i = 0; i < m; ++i) {
        if (i == 0)
          cur = 3.0 / (1.0 + 2.4 * m);
        else if (i == 1)
          cur += 15.0 / (1.0 + 2.5 * m);
        else
          cur += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) *
                 (cur - z[static_cast<std::size_t>(i) - 2]);
        z[static_cast<std::size_t>(i)] = cur;
      }
      break;
    }
    default:
      // arccos-uniform spread, a good start for every weight on [-1, 1]
      for (int i = 0; i < m; ++i)
        z[static_cast<std::size_t>(i)] =
            std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
      break;
  }
  return z;
}

bool newton_polish(const OrthonormalRec& rec, const Support& sup, double& z) {
  for (int it = 0; it < kNewtonBudget; ++it) {
    double v, dv;
    rec.eval(z, v, dv);
    if (!std::isfinite(v) || !std::isfinite(dv) || dv == 0.0) return false;
    double step = v / dv;
    z -= step;
    if (!std::isfinite(z) || z < sup.lo || z > sup.hi) return false;
    if (std::abs(step) <= kTol * std::max(1.0, std::abs(z))) return true;
  }
  return false;
}

bool nodes_valid(const std::vector<double>& nodes, const Support& sup) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i]) || nodes[i] <= sup.lo || nodes[i] >= sup.hi) return false;
    if (i > 0 && nodes[i] - nodes[i - 1] <= 1e-14 * (1.0 + std::abs(nodes[i]))) return false;
  }
  return true;
}

/// Sampling grid matched to where the roots cluster.
std::vector<double> sample_grid(const Family& family, const Support& sup, int count) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  switch (family.kind()) {
    case FamilyKind::Hermite:
      for (int j = 1; j <= count; ++j)
        xs.push_back(sup.lo + (sup.hi - sup.lo) * j / (count + 1.0));
      break;
    case FamilyKind::Laguerre:
      // quadratic spacing: roots crowd toward 0
      for (int j = 1; j <= count; ++j) {
        double t = static_cast<double>(j) / (count + 1.0);
        xs.push_back(sup.hi * t * t);
      }
      break;
    default:
      for (int j = 1; j <= count; ++j)
        xs.push_back(std::cos(std::numbers::pi * (1.0 - static_cast<double>(j) / (count + 1.0))));
      break;
  }
  return xs;
}

std::vector<double> bisection_nodes(const OrthonormalRec& rec, const Family& family,
                                    const Support& sup, int m) {
  for (int count = 8 * m; count <= 1024 * m; count *= 2) {
    std::vector<double> xs = sample_grid(family, sup, count);
    std::vector<std::pair<double, double>> brackets;
    double prev_x = xs[0], prev_v = rec.value(xs[0]);
    for (std::size_t j = 1; j < xs.size(); ++j) {
      double v = rec.value(xs[j]);
      if (prev_v == 0.0) {
        brackets.emplace_back(prev_x, prev_x);  // sampled a root exactly
      } else if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
        brackets.emplace_back(prev_x, xs[j]);
      }
      prev_x = xs[j];
      prev_v = v;
    }
    if (static_cast<int>(brackets.size()) != m) continue;
    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(m));
    for (auto [lo, hi] : brackets) {
      double flo = rec.value(lo);
      for (int it = 0; it < 200 && hi - lo > kTol * std::max(1.0, std::abs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fmid = rec.value(mid);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fmid) == std::signbit(flo)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      double z = 0.5 * (lo + hi);
      newton_polish(rec, sup, z);
      nodes.push_back(z);
    }
    std::sort(nodes.begin(), nodes.end());
    if (nodes_valid(nodes, sup)) return nodes;
  }
  throw ConvergenceFailure("could not bracket all quadrature nodes");
}

QuadRule chebyshev_rule(FamilyKind kind, int m) {
  QuadRule rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  if (kind == FamilyKind::ChebyshevT) {
    for (int i = 1; i <= m; ++i) {
      rule.nodes[static_cast<std::size_t>(m - i)] =
          std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * m));
      rule.weights[static_cast<std::size_t>(m - i)] = std::numbers::pi / m;
    }
  } else {
    for (int i = 1; i <= m; ++i) {
      double theta = std::numbers::pi * i / (m + 1.0);
      rule.nodes[static_cast<std::size_t>(m - i)] = std::cos(theta);
      double s = std::sin(theta);
      rule.weights[static_cast<std::size_t>(m - i)] = std::numbers::pi / (m + 1.0) * s * s;
    }
  }
  return rule;
}

}  // namespace

QuadRule gauss_rule(const Family& family, int m) {
  if (m < 1) throw InvalidParameter("rule size must be >= 1");
  if (m > 64) throw InvalidParameter("rule size must be <= 64");
  if (family.kind() == FamilyKind::ChebyshevT || family.kind() == FamilyKind::ChebyshevU)
    return chebyshev_rule(family.kind(), m);

  OrthonormalRec rec(family, m);
  Support sup = support_bounds(family, m);

  std::vector<double> nodes = initial_guesses(family, m);
  bool ok = true;
  for (auto& z : nodes)
    if (!newton_polish(rec, sup, z)) {
      ok = false;
      break;
    }
  if (ok) {
    std::sort(nodes.begin(), nodes.end());
    ok = nodes_valid(nodes, sup);
  }
  if (!ok) nodes = bisection_nodes(rec, family, sup, m);

  QuadRule rule;
  rule.nodes = std::move(nodes);
  rule.weights.resize(rule.nodes.size());
  std::vector<double> lower;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double v, dv;
    rec.eval(rule.nodes[i], v, dv, &lower);
    double denom = 0.0;
    for (double q : lower) denom += q * q;
    rule.weights[i] = 1.0 / denom;
    if (!std::isfinite(rule.weights[i]) || rule.weights[i] <= 0.0)
      throw ConvergenceFailure("quadrature weight came out invalid");
  }
  return rule;
}

double numeric_filter_integral(const Family& family, int n, int m) {
  if (n < 0) throw InvalidParameter("order must be >= 0");
  if (n == 0) return 0.0;
  QuadRule rule = gauss_rule(family, m);

  PolyFamily ctx(family);
  std::vector<double> A(static_cast<std::size_t>(n)), B(A.size()), C(A.size());
  for (int k = 0; k < n; ++k) {
    RecurrenceCoeffs rc = ctx.recurrence(k);
    A[static_cast<std::size_t>(k)] = rc.A.to_double();
    B[static_cast<std::size_t>(k)] = rc.B.to_double();
    C[static_cast<std::size_t>(k)] = rc.C.to_double();
  }

  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes[i];
    // p_k alongside the deflated q_k = (p_k(x) - p_k(0)) / x; the x-part of
    // the recurrence factor only ever multiplies p_k:
    //   q_{k+1} = A_k p_k + B_k q_k - C_k q_{k-1}
    double p_prev = 1.0;
    double p = A[0] * x + B[0];
    double q_prev = 0.0;
    double q = A[0];
    for (int k = 1; k < n; ++k) {
      auto ku = static_cast<std::size_t>(k);
      double p_next = (A[ku] * x + B[ku]) * p - C[ku] * p_prev;
      double q_next = A[ku] * p + B[ku] * q - C[ku] * q_prev;
      p_prev = p;
      p = p_next;
      q_prev = q;
      q = q_next;
    }
    total += rule.weights[i] * q * q;
  }
  return total;
}

}  // namespace filtint
