#include "qfaulhaber/faulhaber.hpp"

#include <stdexcept>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/limits.hpp"
#include "qfaulhaber/q_bernoulli.hpp"
#include "qfaulhaber/q_sums.hpp"

namespace qf {

namespace {

void require_domain(int n, int k) {
  if (n < 0) throw DomainError("n: negative index out of scope");
  if (k < 1) throw std::invalid_argument("k must be positive");
}

const QPoly& checked_polynomial(const LExt& value) {
  if (!value.is_rational()) throw IdentityViolation("identity violated: L part does not cancel");
  return value.rat_part().as_polynomial("identity violated: result is not a polynomial");
}

}  // namespace

std::optional<SumMethod> parse_sum_method(std::string_view name) {
  if (name == "brute") return SumMethod::BruteForce;
  if (name == "recurrence") return SumMethod::Recurrence;
  if (name == "bernoulli") return SumMethod::BernoulliClosedForm;
  if (name == "betadiff") return SumMethod::BetaDifference;
  return std::nullopt;
}

std::string_view to_string(SumMethod method) {
  switch (method) {
    case SumMethod::BruteForce: return "brute";
    case SumMethod::Recurrence: return "recurrence";
    case SumMethod::BernoulliClosedForm: return "bernoulli";
    case SumMethod::BetaDifference: return "betadiff";
  }
  return "unknown";
}

LExt faulhaber_rhs(int n, int k, LastTermSign sign) {
  require_domain(n, k);
  const QPoly bracket = q_integer(k);
  LExt acc;
  for (int l = 0; l <= n; ++l) {
    const QRat coeff(QPoly::monomial(binomial(n + 1, l), static_cast<std::size_t>(k) * l) *
                     pow(bracket, n + 1 - l));
    acc += beta_recurrence(l) * coeff;
  }
  QRat last(QPoly::monomial(BigRat(1), static_cast<std::size_t>(n + 1) * k) - QPoly(1));
  if (sign == LastTermSign::Printed) last = -last;
  acc += beta_recurrence(n + 1) * last;
  return acc / QRat(n + 1);
}

QPoly powersum_bernoulli(int n, int k) { return checked_polynomial(faulhaber_rhs(n, k)); }

QPoly powersum_via_beta_diff(int n, int k) {
  require_domain(n, k);
  return checked_polynomial((beta_poly(n + 1, k) - beta_recurrence(n + 1)) / QRat(n + 1));
}

BigRat classical_faulhaber(int n, int k) { return limit_at_1(QRat(powersum_bernoulli(n, k))); }

QPoly powersum(int n, int k, SumMethod method) {
  switch (method) {
    case SumMethod::BruteForce: require_domain(n, k); return power_sum_oracle(n, k);
    case SumMethod::Recurrence: return powersum_via_recurrence(n, k);
    case SumMethod::BernoulliClosedForm: return powersum_bernoulli(n, k);
    case SumMethod::BetaDifference: return powersum_via_beta_diff(n, k);
  }
  throw std::invalid_argument("unknown summation method");
}

}  // namespace qf
