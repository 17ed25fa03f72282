#ifndef FILTINT_QUADRATURE_HPP
#define FILTINT_QUADRATURE_HPP

#include <vector>

#include "filtint/families.hpp"

namespace filtint {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Numeric value of a scale constant; mu0 depends on the family parameter.
double tag_value(ConstantTag tag, const Family& family);

double numeric_value(const IntegralValue& v, const Family& family);

/// m-point Gauss rule for the family weight, exact through degree 2m-1.
/// Rule sizes are limited to 1 <= m <= 64; larger rules would need better
/// conditioning than double precision Newton polishing provides.
/// Chebyshev nodes and weights come from their closed forms; other families
/// get Newton iteration on the orthonormal recurrence from family-specific
/// starting points, with a sampling-and-bisection fallback, and reciprocal
/// Christoffel sums as weights. Throws ConvergenceFailure when a valid rule
/// cannot be produced.
QuadRule gauss_rule(const Family& family, int m);

/// Floating-point filter integral of order n under an m-point rule. The
/// deflated factor (p_n(x) - p_n(0)) / x is produced by a joint recurrence,
/// never by dividing near x = 0. Exact (up to rounding) once m >= n.
double numeric_filter_integral(const Family& family, int n, int m);

}  // namespace filtint

#endif
