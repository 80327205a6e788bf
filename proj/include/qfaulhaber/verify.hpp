#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qfaulhaber/faulhaber.hpp"

namespace qf {

struct VerifyOptions {
  int max_n = 8;
  int max_k = 12;
  LastTermSign last_term_sign = LastTermSign::Corrected;
  /// Worker threads for the cell sweep; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SuiteReport {
  std::string name;
  std::string identity;
  std::size_t cells = 0;
  /// Offending cells in sweep order, e.g. "(n=1,k=1)".
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks every identity of the library on the grid n <= max_n, k <= max_k:
///
///   telescoping      sum_{i<n} C(n,i) T_i^(n-i)(k) = [k]^n
///   recurrence       recurrence route = brute-force S_n(k)
///   beta-routes      explicit sum = umbral recurrence for beta_n
///   beta-difference  beta_n(k) - beta_n = n S_{n-1}(k), L part zero
///   closed-form      Bernoulli closed form = brute-force S_n(k)
///   alt-expansion    expanded q^(kx) form of beta_n(x) = beta_n(x), x <= max_k
///   beta-diff-sum    (beta_{n+1}(k) - beta_{n+1})/(n+1) = brute-force S_n(k)
///
/// Cells may run in parallel; the report order is fixed.
std::vector<SuiteReport> run_verification(const VerifyOptions& options);

/// One line per suite, "name  PASS|FAIL  [cells: N]  identity", then any failures.
std::string format_report(const std::vector<SuiteReport>& reports);

}  // namespace qf
