#pragma once

#include "qfaulhaber/big_rat.hpp"
#include "qfaulhaber/qpoly.hpp"

namespace qf {

/// The q-integer [k]_q = (q^k - 1)/(q - 1) = 1 + q + ... + q^(k-1).
/// Zero for k = 0; DomainError("negative index out of scope") for k < 0.
QPoly q_integer(int k);

/// Parameters of T_n^(m)(k) = sum_{l=0}^{k-1} q^(m l) [l]_q^n.
/// S_{n,q}(k) is the member with weight m = 1.
struct WeightedSumSpec {
  int power = 0;   ///< n >= 0
  int weight = 1;  ///< m >= 1
  int upper = 1;   ///< k >= 1

  void validate() const;
};

/// T_n^(m)(k) by direct expansion, with 0^0 = 1. This is the brute-force
/// oracle every closed form is checked against.
QPoly weighted_power_sum(const WeightedSumSpec& spec);

/// S_{n,q}(k) = weighted_power_sum({n, 1, k}).
QPoly power_sum_oracle(int n, int k);

/// ([k]^2 - [2k]/[2]) / 2, which equals S_{1,q}(k).
QPoly powersum_closed_s1(int k);

/// [k]^3/3 - ([k]^2 - [2k]/[2])/2 - [3k]/(3[3]). Equals sum_j q^(j+1) [j]^2,
/// i.e. q * S_{2,q}(k); the extra factor q is deliberate.
QPoly powersum_closed_s2(int k);

/// sum_{i<n} C(n, i) T_i^(n-i)(k), which telescopes to [k]_q^n.
QPoly telescoping_identity_lhs(int n, int k);

/// The same sum read with q -> q^(n-i) substituted everywhere, including
/// inside [l]_q. Kept only as the counterexample showing that reading fails.
QPoly telescoping_identity_lhs_literal(int n, int k);

/// S_{n,q}(k) from (n+1) S_n = [k]^(n+1) - sum_{i<n} C(n+1, i) T_i^(n+1-i)(k).
/// IdentityViolation if the division by n + 1 leaves a remainder.
QPoly powersum_via_recurrence(int n, int k);

/// sum_{l>=0} q^l [l]_q^n for a rational |q| < 1, exactly:
///   (q - 1)^(-n) sum_i C(n, i) (-1)^(n-i) / (1 - q^(i+1)).
/// DomainError("divergent series") when |q| >= 1.
BigRat powersum_infinite(int n, const BigRat& q);

/// Partial sum sum_{l<terms} q^l [l]_q^n, evaluated exactly.
BigRat powersum_partial(int n, const BigRat& q, int terms);

/// Right side of the n = 2 telescoped form with [k]_q -> 1/(1-q) and
/// [mk]_q/[m]_q -> 1/(1-q^m), the k -> infinity limit for |q| < 1.
BigRat powersum_closed_s2_limit(const BigRat& q);

}  // namespace qf
