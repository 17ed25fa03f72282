#ifndef FILTINT_INTEGRALS_HPP
#define FILTINT_INTEGRALS_HPP

#include <string>
#include <vector>

#include "filtint/families.hpp"
#include "filtint/poly.hpp"

namespace filtint {

/// One named check: an expected value, what was computed, and whether they
/// agreed. Values are kept as strings so reports can mix rationals, tagged
/// integrals and polynomials.
struct VerificationItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string subject;
  std::vector<VerificationItem> items;
  bool all_pass() const;
  void add(std::string name, std::string expected, std::string actual);
};

/// Exact moment of the weight: integral of x^m against the family's weight
/// over its support. Odd moments of the symmetric families are zero.
IntegralValue weight_moment(const Family& family, int m);

/// Termwise integration of p against the family's weight.
IntegralValue integrate_poly(const Family& family, const Poly& p);

/// The filter integral of order n: integral of ((p_n(x) - p_n(0)) / x)^2
/// against the weight. The overload with a PolyFamily reuses its memo.
IntegralValue filter_integral(PolyFamily& ctx, int n);
IntegralValue filter_integral(const Family& family, int n);

/// Closed form of the filter integral, evaluated without expanding p_n.
IntegralValue closed_form(const Family& family, int n);

/// Same quantity routed through the family's integral recurrence, seeded at
/// small n; an independent derivation path from closed_form.
IntegralValue closed_form_via_recurrence(const Family& family, int n);

/// Checks of the binomial-sum identities behind the Laguerre closed form:
/// the inner sums B_{n,k}, the two alternating binomial sums feeding them, the
/// vanishing of the cross sum, and the final assembly to 2n - H_n.
VerificationReport laguerre_identities(int n);

/// Three-way agreement for n = 0..n_max: expanded integral vs closed form,
/// recurrence route vs closed form, and the generated polynomial's value at
/// zero vs its closed form.
VerificationReport verify_family(const Family& family, int n_max);

}  // namespace filtint

#endif
