#include "qfaulhaber/q_sums.hpp"

#include <stdexcept>
#include <string>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/qrat.hpp"

namespace qf {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) throw std::invalid_argument(std::string(name) + " must be positive");
}

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw DomainError(std::string(name) + ": negative index out of scope");
}

// [mk]_q / [m]_q as a polynomial: 1 + q^m + ... + q^(m(k-1)).
QRat q_integer_ratio(int mk, int m) { return QRat::normalize(q_integer(mk), q_integer(m)); }

}  // namespace

QPoly q_integer(int k) {
  if (k < 0) throw DomainError("negative index out of scope");
  return QPoly(std::vector<BigRat>(static_cast<std::size_t>(k), BigRat(1)));
}

void WeightedSumSpec::validate() const {
  require_nonnegative(power, "power");
  require_positive(weight, "weight");
  require_positive(upper, "upper");
}

QPoly weighted_power_sum(const WeightedSumSpec& spec) {
  spec.validate();
  QPoly total;
  for (int l = 0; l < spec.upper; ++l) {
    total += QPoly::monomial(BigRat(1), static_cast<std::size_t>(spec.weight) * l) *
             pow(q_integer(l), spec.power);
  }
  return total;
}

QPoly power_sum_oracle(int n, int k) { return weighted_power_sum({n, 1, k}); }

QPoly powersum_closed_s1(int k) {
  require_positive(k, "k");
  const QRat kq = q_integer(k);
  const QRat value = (kq * kq - q_integer_ratio(2 * k, 2)) / QRat(2);
  return value.as_polynomial("identity violated: closed form for n = 1 is not a polynomial");
}

QPoly powersum_closed_s2(int k) {
  require_positive(k, "k");
  const QRat kq = q_integer(k);
  const QRat value = pow(kq, 3) / QRat(3) - (kq * kq - q_integer_ratio(2 * k, 2)) / QRat(2) -
                     q_integer_ratio(3 * k, 3) / QRat(3);
  return value.as_polynomial("identity violated: closed form for n = 2 is not a polynomial");
}

QPoly telescoping_identity_lhs(int n, int k) {
  require_positive(n, "n");
  require_positive(k, "k");
  QPoly total;
  for (int i = 0; i < n; ++i) total += binomial(n, i) * weighted_power_sum({i, n - i, k});
  return total;
}

QPoly telescoping_identity_lhs_literal(int n, int k) {
  require_positive(n, "n");
  require_positive(k, "k");
  QPoly total;
  for (int i = 0; i < n; ++i) {
    total += binomial(n, i) * subst_power(power_sum_oracle(i, k), static_cast<unsigned>(n - i));
  }
  return total;
}

QPoly powersum_via_recurrence(int n, int k) {
  require_nonnegative(n, "n");
  require_positive(k, "k");
  QPoly rhs = pow(q_integer(k), n + 1);
  for (int i = 0; i < n; ++i) rhs -= binomial(n + 1, i) * weighted_power_sum({i, n + 1 - i, k});
  // Over Q every scalar division is exact; the real check is that the result
  // is the integer-coefficient sum it claims to be.
  QPoly result = rhs / BigRat(n + 1);
  for (const auto& c : result.coefficients()) {
    if (!c.is_integer()) {
      throw IdentityViolation("identity violated: recurrence division by n + 1 is not exact");
    }
  }
  return result;
}

BigRat powersum_infinite(int n, const BigRat& q) {
  require_nonnegative(n, "n");
  if (q.abs() >= BigRat(1)) throw DomainError("divergent series");
  BigRat acc;
  for (int i = 0; i <= n; ++i) {
    const BigRat term = binomial(n, i) / (BigRat(1) - q.pow(i + 1));
    acc += (n - i) % 2 == 0 ? term : -term;
  }
  return acc / (q - BigRat(1)).pow(n);
}

BigRat powersum_partial(int n, const BigRat& q, int terms) {
  require_nonnegative(n, "n");
  BigRat acc;
  BigRat q_power(1);   // q^l
  BigRat bracket(0);   // [l]_q
  for (int l = 0; l < terms; ++l) {
    acc += q_power * bracket.pow(n);
    bracket += q_power;
    q_power *= q;
  }
  return acc;
}

BigRat powersum_closed_s2_limit(const BigRat& q) {
  if (q.abs() >= BigRat(1)) throw DomainError("divergent series");
  const BigRat one(1);
  const BigRat kq = (one - q).inverse();
  return kq.pow(3) / BigRat(3) - (kq * kq - (one - q * q).inverse()) / BigRat(2) -
         (one - q.pow(3)).inverse() / BigRat(3);
}

}  // namespace qf
