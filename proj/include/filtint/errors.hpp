#ifndef FILTINT_ERRORS_HPP
#define FILTINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace filtint {

/// A polynomial division that was expected to be exact left a remainder.
struct NonZeroRemainder : std::runtime_error {
  explicit NonZeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

/// A Sturm query endpoint is a root of the (squarefree) polynomial.
struct BoundaryRoot : std::runtime_error {
  explicit BoundaryRoot(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient denominator is not invertible modulo the chosen prime.
struct DenominatorNotInvertible : std::runtime_error {
  explicit DenominatorNotInvertible(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter is outside its admissible set (e.g. Gegenbauer a <= -1/2 or a = 0).
struct InvalidParameter : std::invalid_argument {
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Newton iteration for a quadrature node did not converge within its budget.
struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic between integral values carrying different constant tags.
struct TagMismatch : std::logic_error {
  explicit TagMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace filtint

#endif
