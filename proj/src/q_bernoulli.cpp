#include "qfaulhaber/q_bernoulli.hpp"

#include <algorithm>
#include <stdexcept>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/q_sums.hpp"

namespace qf {

namespace {

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw DomainError(std::string(name) + ": negative index out of scope");
}

QRat q_power(std::size_t exponent) { return QPoly::monomial(BigRat(1), exponent); }

// One recurrence step: beta_k = ([k == 1] - sum_{j<k} C(k,j) q^j beta_j) / (q^k - 1).
LExt next_beta(const std::deque<LExt>& lower) {
  const int k = static_cast<int>(lower.size());
  if (k == 0) return LExt::l();
  LExt acc = k == 1 ? LExt(QRat(1)) : LExt();
  for (int j = 0; j < k; ++j) {
    acc -= lower[static_cast<std::size_t>(j)] *
           (QRat(binomial(k, j)) * q_power(static_cast<std::size_t>(j)));
  }
  return acc / QRat(QPoly::monomial(BigRat(1), static_cast<std::size_t>(k)) - QPoly(1));
}

BetaCache& global_cache() {
  static BetaCache cache;
  return cache;
}

}  // namespace

LExt BetaCache::get(int n) {
  require_nonnegative(n, "n");
  std::lock_guard lock(mutex_);
  while (memo_.size() <= static_cast<std::size_t>(n)) memo_.push_back(next_beta(memo_));
  return memo_[static_cast<std::size_t>(n)];
}

std::size_t BetaCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

LExt beta_recurrence(int n) { return global_cache().get(n); }

LExt beta_explicit(int n) {
  require_nonnegative(n, "n");
  const QPoly q_minus_one = QPoly::q() - QPoly(1);
  LExt bracket = LExt::l();
  for (int k = 1; k <= n; ++k) {
    // k (q - 1)/(q^k - 1) = k/[k]_q
    QRat term = QRat::normalize(QPoly(binomial(n, k) * BigRat(k)), q_integer(k));
    bracket += LExt(k % 2 == 0 ? term : -term);
  }
  return bracket * pow(QRat(QPoly(1) - QPoly::q()), -n);
}

LExt beta_poly(int n, int x) {
  require_nonnegative(n, "n");
  require_nonnegative(x, "x");
  const QPoly bracket = q_integer(x);
  LExt acc;
  for (int j = 0; j <= n; ++j) {
    const QRat coeff(QPoly::monomial(binomial(n, j), static_cast<std::size_t>(j) * x) *
                     pow(bracket, n - j));
    if (!coeff.is_zero()) acc += beta_recurrence(j) * coeff;
  }
  return acc;
}

LExt beta_poly_alt(int n, int x) {
  require_nonnegative(n, "n");
  require_nonnegative(x, "x");
  const QPoly bracket = q_integer(x);
  const QPoly step = bracket * (QPoly::q() - QPoly(1));  // [x]_q (q - 1)
  LExt acc;
  for (int k = 0; k <= n; ++k) {
    QPoly inner;
    for (int l = 0; l <= k; ++l) inner += binomial(k, l) * pow(step, l);
    const QRat coeff =
        QRat(binomial(n, k) * pow(bracket, n - k) * inner);
    if (!coeff.is_zero()) acc += beta_recurrence(k) * coeff;
  }
  return acc;
}

LExt beta_difference(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("beta_difference needs n >= 1 and k >= 1");
  LExt diff = beta_poly(n, k) - beta_recurrence(n);
  if (!diff.is_rational()) throw IdentityViolation("L-cancellation failed");
  return diff;
}

BigRat beta_classical_limit(int n, const LimitOptions& options) {
  LimitOptions opts = options;
  // rat and log parts carry poles of order up to n at q = 1.
  opts.order_hint = std::max(opts.order_hint, n + 2);
  return limit_at_1(beta_recurrence(n), opts);
}

}  // namespace qf
