#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/faulhaber.hpp"
#include "qfaulhaber/q_bernoulli.hpp"
#include "qfaulhaber/q_sums.hpp"

namespace qf {
namespace {

constexpr SumMethod kAllMethods[] = {SumMethod::BruteForce, SumMethod::Recurrence,
                                     SumMethod::BernoulliClosedForm, SumMethod::BetaDifference};

TEST(PowersumBernoulli, Examples) {
  EXPECT_TRUE(powersum_bernoulli(1, 1).is_zero());
  EXPECT_EQ(powersum_bernoulli(2, 3),
            QPoly(std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(1), BigRat(2), BigRat(1)}));
  EXPECT_EQ(powersum_bernoulli(2, 3), power_sum_oracle(2, 3));
  EXPECT_EQ(powersum_bernoulli(0, 4), q_integer(4));
}

TEST(PowersumBernoulli, LCancellationAndIntegrality) {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 1; k <= 12; ++k) {
      const LExt rhs = faulhaber_rhs(n, k);
      EXPECT_TRUE(rhs.is_rational()) << n << "," << k;
      ASSERT_TRUE(rhs.rat_part().is_polynomial());
      for (const auto& c : rhs.rat_part().num().coefficients()) {
        EXPECT_TRUE(c.is_integer());
        EXPECT_GT(c.sign(), -1);
      }
    }
  }
}

TEST(PowersumBernoulli, ErratumWitness) {
  const LExt printed = faulhaber_rhs(1, 1, LastTermSign::Printed);
  EXPECT_FALSE(printed.is_zero());
  // Hand expansion: with the misprinted sign the beta_2 term doubles instead of
  // cancelling, leaving beta_0 + 2q beta_1 = L + 2q (1 - L)/(q - 1).
  const QRat two_q_over = QRat::normalize(QPoly::q() * BigRat(2), QPoly::q() - QPoly(1));
  EXPECT_EQ(printed, LExt(two_q_over, QRat(1) - two_q_over));
  EXPECT_TRUE(faulhaber_rhs(1, 1, LastTermSign::Corrected).is_zero());
}

TEST(PowersumViaBetaDiff, Examples) {
  EXPECT_EQ(powersum_via_beta_diff(1, 3), power_sum_oracle(1, 3));
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(powersum_via_beta_diff(n, 1).is_zero());
  EXPECT_EQ(powersum_via_beta_diff(3, 2), QPoly::q());
}

TEST(ClassicalFaulhaber, SchoolFormulas) {
  EXPECT_EQ(classical_faulhaber(2, 10), BigRat(285));
  EXPECT_EQ(classical_faulhaber(3, 5), BigRat(100));
  EXPECT_EQ(classical_faulhaber(1, 4), BigRat(6));
  for (int k = 1; k <= 20; ++k) {
    const BigRat m(k - 1);
    EXPECT_EQ(classical_faulhaber(1, k), (m * m + m) / BigRat(2));
    EXPECT_EQ(classical_faulhaber(2, k), (BigRat(2) * m.pow(3) + BigRat(3) * m * m + m) / BigRat(6));
    EXPECT_EQ(classical_faulhaber(3, k), (m.pow(4) + BigRat(2) * m.pow(3) + m * m) / BigRat(4));
  }
}

TEST(ClassicalFaulhaber, ShadowOfIntegerSums) {
  for (int n = 0; n <= 5; ++n)
    for (int k = 1; k <= 20; ++k)
      EXPECT_EQ(classical_faulhaber(n, k), testing::integer_power_sum(n, k)) << n << "," << k;
}

TEST(Powersum, AllMethodsAgree) {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 1; k <= 12; ++k) {
      const QPoly reference = powersum(n, k, SumMethod::BruteForce);
      for (auto m : kAllMethods) EXPECT_EQ(powersum(n, k, m), reference) << to_string(m) << n << "," << k;
    }
  }
}

TEST(Powersum, TrivialCases) {
  for (auto m : kAllMethods) {
    EXPECT_EQ(powersum(0, 5, m), q_integer(5));
    EXPECT_TRUE(powersum(5, 1, m).is_zero());
    EXPECT_THROW((void)powersum(-1, 3, m), DomainError);
    EXPECT_THROW((void)powersum(2, 0, m), std::invalid_argument);
  }
}

TEST(SumMethodNames, RoundTrip) {
  for (auto m : kAllMethods) EXPECT_EQ(parse_sum_method(to_string(m)), m);
  EXPECT_FALSE(parse_sum_method("nope").has_value());
}

}  // namespace
}  // namespace qf
