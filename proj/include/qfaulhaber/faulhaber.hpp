#pragma once

#include <optional>
#include <string_view>

#include "qfaulhaber/big_rat.hpp"
#include "qfaulhaber/lext.hpp"
#include "qfaulhaber/qpoly.hpp"

namespace qf {

/// The four independent routes to S_{n,q}(k).
enum class SumMethod {
  BruteForce,           ///< direct expansion of sum_l q^l [l]^n
  Recurrence,           ///< weighted telescoping recurrence
  BernoulliClosedForm,  ///< closed form in the q-Bernoulli numbers
  BetaDifference,       ///< (beta_{n+1}(k) - beta_{n+1}) / (n + 1)
};

std::optional<SumMethod> parse_sum_method(std::string_view name);
std::string_view to_string(SumMethod method);

/// Sign of the beta_{n+1} term in the closed form. The published statement
/// has (1 - q^((n+1)k)); the identity actually needs (q^((n+1)k) - 1).
/// Printed exists only so the misprint can be exercised as a witness.
enum class LastTermSign { Corrected, Printed };

/// Right side of the closed form as an element of Q(q) + Q(q) L:
///   (1/(n+1)) [ sum_{l=0}^n C(n+1,l) q^(kl) beta_l [k]^(n+1-l) +/- (q^((n+1)k) - 1) beta_{n+1} ]
LExt faulhaber_rhs(int n, int k, LastTermSign sign = LastTermSign::Corrected);

/// S_{n,q}(k) from the closed form. Verifies on every call that the L part
/// cancels and that the result is a polynomial; IdentityViolation otherwise.
QPoly powersum_bernoulli(int n, int k);

/// S_{n,q}(k) as (beta_{n+1}(k) - beta_{n+1}) / (n + 1), self-checked the same way.
QPoly powersum_via_beta_diff(int n, int k);

/// Classical sum_{l<k} l^n as the q -> 1 limit of the closed form.
BigRat classical_faulhaber(int n, int k);

/// Dispatch to one of the four routes; all agree.
QPoly powersum(int n, int k, SumMethod method);

}  // namespace qf
