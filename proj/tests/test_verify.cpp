#include <gtest/gtest.h>

#include <algorithm>

#include "qfaulhaber/verify.hpp"

namespace qf {
namespace {

bool all_pass(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

TEST(Verify, DefaultGridPasses) {
  const auto reports = run_verification({4, 6, LastTermSign::Corrected, 2});
  EXPECT_EQ(reports.size(), 7U);
  EXPECT_TRUE(all_pass(reports)) << format_report(reports);
}

TEST(Verify, DegenerateBoundsPass) {
  const auto reports = run_verification({0, 1, LastTermSign::Corrected, 1});
  EXPECT_TRUE(all_pass(reports));
  EXPECT_EQ(reports.front().cells, 0U);
}

TEST(Verify, PrintedSignFailsOnlyTheClosedForm) {
  const auto reports = run_verification({1, 1, LastTermSign::Printed, 1});
  for (const auto& r : reports) {
    if (r.name == "closed-form") {
      EXPECT_FALSE(r.passed());
      EXPECT_NE(std::find(r.failures.begin(), r.failures.end(), "(n=1,k=1)"), r.failures.end());
    } else {
      EXPECT_TRUE(r.passed()) << r.name;
    }
  }
}

TEST(Verify, ReportIsIndependentOfThreadCount) {
  const auto serial = format_report(run_verification({3, 4, LastTermSign::Printed, 1}));
  const auto parallel = format_report(run_verification({3, 4, LastTermSign::Printed, 4}));
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace qf
