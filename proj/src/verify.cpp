#include "qfaulhaber/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "qfaulhaber/q_bernoulli.hpp"
#include "qfaulhaber/q_sums.hpp"

namespace qf {

namespace {

struct Cell {
  std::string label;
  std::function<bool()> check;
};

std::string nk(int n, int k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

// Runs the cells on a small pool; results land at the cell's own index.
std::vector<std::string> run_cells(const std::vector<Cell>& cells, unsigned threads) {
  std::vector<std::optional<std::string>> outcome(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        if (!cells[i].check()) outcome[i] = cells[i].label;
      } catch (const std::exception& e) {
        outcome[i] = cells[i].label + " [" + e.what() + "]";
      }
    }
  };
  const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<std::string> failures;
  for (auto& o : outcome) {
    if (o) failures.push_back(std::move(*o));
  }
  return failures;
}

}  // namespace

std::vector<SuiteReport> run_verification(const VerifyOptions& options) {
  const int max_n = options.max_n;
  const int max_k = options.max_k;
  const LastTermSign sign = options.last_term_sign;
  const unsigned threads =
      options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());

  struct Suite {
    std::string name;
    std::string identity;
    std::vector<Cell> cells;
  };
  std::vector<Suite> suites;

  {
    Suite s{"telescoping", "sum_{i<n} C(n,i) T_i^(n-i)(k) = [k]_q^n", {}};
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k <= max_k; ++k)
        s.cells.push_back({nk(n, k), [n, k] {
                             return telescoping_identity_lhs(n, k) ==
                                    pow(q_integer(k), n);
                           }});
    suites.push_back(std::move(s));
  }
  {
    Suite s{"recurrence", "recurrence route = brute-force S_n(k)", {}};
    for (int n = 0; n <= max_n; ++n)
      for (int k = 1; k <= max_k; ++k)
        s.cells.push_back(
            {nk(n, k), [n, k] { return powersum_via_recurrence(n, k) == power_sum_oracle(n, k); }});
    suites.push_back(std::move(s));
  }
  {
    Suite s{"beta-routes", "explicit sum = umbral recurrence for beta_n", {}};
    for (int n = 0; n <= max_n; ++n)
      s.cells.push_back({"(n=" + std::to_string(n) + ")",
                         [n] { return beta_explicit(n) == beta_recurrence(n); }});
    suites.push_back(std::move(s));
  }
  {
    Suite s{"beta-difference", "beta_n(k) - beta_n = n S_{n-1}(k)", {}};
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k <= max_k; ++k)
        s.cells.push_back({nk(n, k), [n, k] {
                             return beta_difference(n, k) ==
                                    LExt(QRat(BigRat(n) * power_sum_oracle(n - 1, k)));
                           }});
    suites.push_back(std::move(s));
  }
  {
    Suite s{"closed-form", "Bernoulli closed form = brute-force S_n(k)", {}};
    for (int n = 0; n <= max_n; ++n)
      for (int k = 1; k <= max_k; ++k)
        s.cells.push_back({nk(n, k), [n, k, sign] {
                             return faulhaber_rhs(n, k, sign) == LExt(QRat(power_sum_oracle(n, k)));
                           }});
    suites.push_back(std::move(s));
  }
  {
    Suite s{"alt-expansion", "expanded form of beta_n(x) = beta_n(x)", {}};
    for (int n = 0; n <= max_n; ++n)
      for (int x = 0; x <= max_k; ++x)
        s.cells.push_back({"(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           [n, x] { return beta_poly_alt(n, x) == beta_poly(n, x); }});
    suites.push_back(std::move(s));
  }
  {
    Suite s{"beta-diff-sum", "(beta_{n+1}(k) - beta_{n+1})/(n+1) = brute-force S_n(k)", {}};
    for (int n = 0; n <= max_n; ++n)
      for (int k = 1; k <= max_k; ++k)
        s.cells.push_back(
            {nk(n, k), [n, k] { return powersum_via_beta_diff(n, k) == power_sum_oracle(n, k); }});
    suites.push_back(std::move(s));
  }

  std::vector<SuiteReport> reports;
  for (auto& suite : suites) {
    SuiteReport report{suite.name, suite.identity, suite.cells.size(), {}};
    report.failures = run_cells(suite.cells, threads);
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string format_report(const std::vector<SuiteReport>& reports) {
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.name << std::string(width - r.name.size() + 2, ' ') << (r.passed() ? "PASS" : "FAIL")
        << "  [cells: " << r.cells << "]  " << r.identity << "\n";
    for (const auto& f : r.failures) out << "  failed at " << f << "\n";
  }
  return out.str();
}

}  // namespace qf
