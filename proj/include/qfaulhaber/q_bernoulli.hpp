#pragma once

#include <cstddef>
#include <deque>
#include <mutex>

#include "qfaulhaber/big_rat.hpp"
#include "qfaulhaber/lext.hpp"
#include "qfaulhaber/limits.hpp"

namespace qf {

/// Memo table for the q-Bernoulli numbers. Entries are appended in index
/// order under a lock and never modified afterwards; lookups return copies.
class BetaCache {
 public:
  /// beta_{n,q}, computing and storing any missing lower indices first.
  LExt get(int n);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::deque<LExt> memo_;
};

/// beta_{n,q} from the umbral recurrence (q beta + 1)^k - beta_k = [k == 1],
/// starting at beta_0 = L. Served from a process-wide BetaCache.
LExt beta_recurrence(int n);

/// beta_{n,q} from the explicit alternating sum
///   (1/(1-q))^n [ L + sum_{k=1}^n C(n,k) (-1)^k k (q-1)/(q^k - 1) ],
/// where the k = 0 term (0/[0]_q, indeterminate) is taken as its limit L.
LExt beta_explicit(int n);

/// beta_{n,q}(x) = sum_j C(n,j) q^(jx) beta_j [x]_q^(n-j) for integer x >= 0.
LExt beta_poly(int n, int x);

/// The same polynomial with q^(kx) expanded as sum_l C(k,l) [x]_q^l (q-1)^l.
LExt beta_poly_alt(int n, int x);

/// beta_{n,q}(k) - beta_{n,q}. The L component must cancel; a leftover
/// raises IdentityViolation("L-cancellation failed").
LExt beta_difference(int n, int k);

/// lim_{q -> 1} beta_{n,q}, the classical Bernoulli number B_n (B_1 = -1/2).
BigRat beta_classical_limit(int n, const LimitOptions& options = {});

}  // namespace qf
