#include "qfaulhaber/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/faulhaber.hpp"
#include "qfaulhaber/limits.hpp"
#include "qfaulhaber/q_bernoulli.hpp"
#include "qfaulhaber/q_sums.hpp"
#include "qfaulhaber/render.hpp"
#include "qfaulhaber/verify.hpp"

namespace qf::cli {

namespace {

constexpr int kDecimalDigits = 50;
constexpr const char* kOrderCapEnv = "QF_SERIES_ORDER_CAP";

// Thrown for input problems found after flag parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigRat parse_exact(const std::string& flag, const std::string& text) {
  try {
    return BigRat::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects an exact rational 'p' or 'p/r', got '" + text + "'");
  }
}

// "p", "p/r" or the exact scientific form "Ae-B" (= A / 10^B).
BigRat parse_tolerance(const std::string& text) {
  const auto e = text.find("e-");
  if (e == std::string::npos) return parse_exact("--tolerance", text);
  const std::string mantissa = text.substr(0, e);
  const std::string exponent = text.substr(e + 2);
  if (mantissa.empty() || exponent.empty() ||
      mantissa.find_first_not_of("0123456789") != std::string::npos ||
      exponent.find_first_not_of("0123456789") != std::string::npos || exponent.size() > 4) {
    throw UsageError("--tolerance expects 'p/r' or 'Ae-B', got '" + text + "'");
  }
  return BigRat::parse(mantissa) / BigRat(10).pow(std::stoi(exponent));
}

LimitOptions limit_options_from_env() {
  LimitOptions options;
  if (const char* raw = std::getenv(kOrderCapEnv); raw != nullptr && *raw != '\0') {
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6 ||
        std::stoi(text) < 1) {
      throw UsageError(std::string(kOrderCapEnv) + " must be a positive integer");
    }
    options.order_cap = std::stoi(text);
  }
  return options;
}

OutputFormat format_of(const std::string& name) { return *parse_output_format(name); }

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "latex"}))
      ->capture_default_str();
}

int cmd_bernoulli(int n, const std::string& format, std::ostream& out) {
  out << render(beta_recurrence(n), format_of(format)) << "\n";
  return kExitOk;
}

int cmd_powersum(int n, int k, const std::string& method, const std::string& eval_q,
                 const std::string& format, std::ostream& out) {
  const QPoly value = powersum(n, k, *parse_sum_method(method));
  if (eval_q.empty()) {
    out << render(value, format_of(format)) << "\n";
  } else {
    out << render(value(parse_exact("--eval-q", eval_q)), format_of(format)) << "\n";
  }
  return kExitOk;
}

int cmd_limit(int n, std::ostream& out) {
  out << beta_classical_limit(n, limit_options_from_env()) << "\n";
  return kExitOk;
}

int cmd_tail(int n, const std::string& q_text, const std::string& tolerance_text, int max_terms,
             std::ostream& out, std::ostream& err) {
  const BigRat q = parse_exact("--q", q_text);
  const BigRat tolerance = parse_tolerance(tolerance_text);
  if (q.abs() >= BigRat(1)) throw UsageError("divergent series: --q must satisfy |q| < 1");

  const BigRat closed = powersum_infinite(n, q);
  out << "sum_{l>=0} q^l [l]_q^" << n << " at q = " << q << "\n";
  out << "closed form: " << closed << "\n";
  out << "closed form ~ " << closed.to_decimal(kDecimalDigits) << "\n";
  bool identity_ok = true;
  if (n == 2) {
    const BigRat weighted = q * closed;
    const BigRat telescoped = powersum_closed_s2_limit(q);
    identity_ok = weighted == telescoped;
    out << "q * closed form: " << weighted << "\n";
    out << "telescoped limit: " << telescoped << (identity_ok ? " (equal)" : " (MISMATCH)") << "\n";
  }

  // Walk the partial sums exactly until the gap falls under the tolerance.
  BigRat partial;
  BigRat q_power(1);
  BigRat bracket(0);
  BigRat gap = closed.abs();
  int terms = 0;
  while (gap > tolerance && terms < max_terms) {
    partial += q_power * bracket.pow(n);
    bracket += q_power;
    q_power *= q;
    ++terms;
    gap = (closed - partial).abs();
  }
  const bool converged = gap <= tolerance;
  out << "terms: " << terms << "\n";
  out << "partial sum ~ " << partial.to_decimal(kDecimalDigits) << "\n";
  out << "gap ~ " << gap.to_decimal(kDecimalDigits) << "\n";
  out << "tolerance: " << tolerance << "\n";
  out << "status: " << (converged ? "converged" : "not converged") << "\n";
  if (!identity_ok) err << "error: telescoped limit disagrees with the closed form\n";
  if (!converged) err << "error: gap exceeds tolerance after " << max_terms << " terms\n";
  return converged && identity_ok ? kExitOk : kExitFailure;
}

int cmd_verify(int max_n, int max_k, const std::string& sign, unsigned threads,
               std::ostream& out) {
  VerifyOptions options;
  options.max_n = max_n;
  options.max_k = max_k;
  options.last_term_sign = sign == "printed" ? LastTermSign::Printed : LastTermSign::Corrected;
  options.threads = threads;
  const auto reports = run_verification(options);
  out << format_report(reports);
  const bool all = std::all_of(reports.begin(), reports.end(),
                               [](const SuiteReport& r) { return r.passed(); });
  out << (all ? "all identities hold" : "verification FAILED") << "\n";
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Exact q-Bernoulli numbers and sums of powers of consecutive q-integers.\n"
      "L denotes the transcendental (q - 1)/log q; q-Bernoulli numbers print as (rat, log)\n"
      "meaning rat + log * L. Series-order cap for limits: env " +
          std::string(kOrderCapEnv) + " (default 64).",
      "qfaulhaber"};
  app.require_subcommand(1);

  int n = 0;
  int k = 1;
  std::string format = "plain";
  std::string method = "bernoulli";
  std::string eval_q;
  std::string q_text;
  std::string tolerance = "1e-9";
  int max_terms = 500;
  int max_n = 8;
  int max_k = 12;
  std::string sign = "corrected";
  unsigned threads = 0;

  auto* bernoulli = app.add_subcommand("bernoulli", "Print beta_{n,q} as (rat, log)");
  bernoulli->add_option("--n", n, "Index n >= 0")->required()->check(CLI::NonNegativeNumber);
  add_format_option(bernoulli, format);

  auto* sum = app.add_subcommand("powersum", "Print S_{n,q}(k) = sum_{l<k} q^l [l]_q^n");
  sum->add_option("--n", n, "Power n >= 0")->required()->check(CLI::NonNegativeNumber);
  sum->add_option("--k", k, "Upper bound k >= 1")->required()->check(CLI::PositiveNumber);
  sum->add_option("--method", method, "Summation route")
      ->check(CLI::IsMember({"brute", "recurrence", "bernoulli", "betadiff"}))
      ->capture_default_str();
  sum->add_option("--eval-q", eval_q, "Evaluate at an exact rational q ('p' or 'p/r')");
  add_format_option(sum, format);

  auto* limit = app.add_subcommand("limit", "Print the q -> 1 limit of beta_{n,q}");
  limit->add_option("--n", n, "Index n >= 0")->required()->check(CLI::NonNegativeNumber);

  auto* tail = app.add_subcommand("tail", "Infinite sum for |q| < 1 against its partial sums");
  tail->add_option("--n", n, "Power n >= 0")->required()->check(CLI::NonNegativeNumber);
  tail->add_option("--q", q_text, "Exact rational q with |q| < 1")->required();
  tail->add_option("--tolerance", tolerance, "Gap threshold ('p/r' or 'Ae-B')")
      ->capture_default_str();
  tail->add_option("--max-terms", max_terms, "Partial-sum cutoff")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check every identity on an (n, k) grid");
  verify->add_option("--max-n", max_n, "Largest n")->check(CLI::NonNegativeNumber)->capture_default_str();
  verify->add_option("--max-k", max_k, "Largest k")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--last-term-sign", sign, "Sign of the beta_{n+1} term (printed = misprint)")
      ->check(CLI::IsMember({"corrected", "printed"}))
      ->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bernoulli) return cmd_bernoulli(n, format, out);
    if (*sum) return cmd_powersum(n, k, method, eval_q, format, out);
    if (*limit) return cmd_limit(n, out);
    if (*tail) return cmd_tail(n, q_text, tolerance, max_terms, out, err);
    if (*verify) return cmd_verify(max_n, max_k, sign, threads, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qf::cli
