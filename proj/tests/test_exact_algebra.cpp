#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/q_sums.hpp"
#include "qfaulhaber/qpoly.hpp"
#include "qfaulhaber/qrat.hpp"

namespace qf {
namespace {

QPoly poly(std::initializer_list<std::int64_t> coeffs) {
  std::vector<BigRat> c;
  for (auto v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

const QPoly kQ = QPoly::q();

// ---------------------------------------------------------------------------
// BigRat

TEST(BigRat, KeepsLowestTerms) {
  const BigRat r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(BigRat(4, 2).to_string(), "2");
}

TEST(BigRat, ParseAcceptsOnlyExactLiterals) {
  EXPECT_EQ(BigRat::parse("9/10"), BigRat(9, 10));
  EXPECT_EQ(BigRat::parse("-3"), BigRat(-3));
  EXPECT_EQ(BigRat::parse("18/20"), BigRat(9, 10));
  EXPECT_THROW(BigRat::parse("0.9"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse("1e-3"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse(""), std::invalid_argument);
}

TEST(BigRat, DecimalRenderingTruncates) {
  EXPECT_EQ(BigRat(2, 3).to_decimal(5), "0.66666");
  EXPECT_EQ(BigRat(-2, 3).to_decimal(3), "-0.666");
  EXPECT_EQ(BigRat(7).to_decimal(2), "7.00");
  EXPECT_EQ(BigRat(1, 1000).to_decimal(2), "0.00");
}

TEST(BigRat, DivisionByZeroThrows) {
  EXPECT_THROW(BigRat(1) / BigRat(0), DomainError);
  EXPECT_THROW(BigRat(0).inverse(), DomainError);
}

TEST(BigRat, Binomial) {
  EXPECT_EQ(binomial(9, 4), BigRat(126));
  EXPECT_EQ(binomial(3, 5), BigRat(0));
  EXPECT_EQ(binomial(0, 0), BigRat(1));
}

// ---------------------------------------------------------------------------
// QPoly

TEST(QPoly, TrimsTrailingZeros) {
  const QPoly p(std::vector<BigRat>{BigRat(1), BigRat(0), BigRat(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(QPoly, DivmodReconstructs) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const QPoly a = testing::random_poly(rng, 8);
    const QPoly b = testing::random_poly(rng, 5, false);
    const auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
  EXPECT_THROW(divmod(kQ, QPoly()), DomainError);
}

TEST(QPoly, GcdIsMonicCommonFactor) {
  // (q - 1)(q + 2) and (q - 1)(q^2 + 1)
  const QPoly a = (kQ - QPoly(1)) * (kQ + QPoly(2));
  const QPoly b = (kQ - QPoly(1)) * (kQ * kQ + QPoly(1)) * BigRat(3, 7);
  EXPECT_EQ(gcd(a, b), kQ - QPoly(1));
  EXPECT_EQ(gcd(a, QPoly()), a);
  EXPECT_EQ(gcd(kQ * BigRat(5), QPoly()), kQ);
  EXPECT_EQ(gcd(a, QPoly(4)), QPoly(1));
}

TEST(QPoly, GcdDividesBothInputs) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const QPoly c = testing::random_poly(rng, 4, false);
    const QPoly a = testing::random_poly(rng, 5, false) * c;
    const QPoly b = testing::random_poly(rng, 5, false) * c;
    const QPoly g = gcd(a, b);
    ASSERT_FALSE(g.is_zero());
    EXPECT_TRUE(g.leading().is_one());
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
    EXPECT_TRUE(divmod(g, c / c.leading()).second.is_zero());
  }
}

TEST(QPoly, ShiftToOneExpandsBinomially) {
  // 1 + q + q^2 at q = 1 + e is 3 + 3e + e^2
  EXPECT_EQ(shift_to_one(q_integer(3)), poly({3, 3, 1}));
  std::mt19937 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    const QPoly p = testing::random_poly(rng, 7);
    const BigRat e(iter - 20, 7);
    EXPECT_EQ(shift_to_one(p)(e), p(BigRat(1) + e));
  }
}

TEST(QPoly, SubstPowerExamples) {
  EXPECT_EQ(subst_power(q_integer(3), 2), poly({1, 0, 1, 0, 1}));
  // oracle: evaluate 1 + q + q^2 at 3^2
  EXPECT_EQ(subst_power(q_integer(3), 2)(BigRat(3)), BigRat(91));
  EXPECT_EQ(subst_power(QPoly(BigRat(5, 3)), 5), QPoly(BigRat(5, 3)));
}

// ---------------------------------------------------------------------------
// QRat

TEST(QRat, NormalizeExamples) {
  const QRat a = QRat::normalize(kQ * kQ - QPoly(1), kQ - QPoly(1));
  EXPECT_EQ(a.num(), kQ + QPoly(1));
  EXPECT_EQ(a.den(), QPoly(1));

  const QRat b = QRat::normalize(kQ * BigRat(2), QPoly(2));
  EXPECT_EQ(b.num(), kQ);
  EXPECT_EQ(b.den(), QPoly(1));

  const QRat c = QRat::normalize(pow(kQ, 6) - QPoly(1), kQ * kQ - QPoly(1));
  const QPoly expected = poly({1, 0, 1, 0, 1});
  EXPECT_EQ(c.num(), expected);
  EXPECT_EQ(c.den(), QPoly(1));
  // independent check of the frozen quotient: (q^4 + q^2 + 1)(q^2 - 1) = q^6 - 1
  EXPECT_EQ(expected * (kQ * kQ - QPoly(1)), pow(kQ, 6) - QPoly(1));
  EXPECT_EQ(expected, subst_power(q_integer(3), 2));
}

TEST(QRat, ZeroDenominatorThrows) {
  try {
    QRat::normalize(kQ, QPoly());
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "division by zero polynomial");
  }
  EXPECT_THROW(QRat().inverse(), DomainError);
}

TEST(QRat, DenominatorIsMonic) {
  const QRat f = QRat::normalize(QPoly(3), kQ * BigRat(6) - QPoly(6));
  EXPECT_TRUE(f.den().leading().is_one());
  EXPECT_EQ(f.num(), QPoly(BigRat(1, 2)));
}

TEST(QRatProperty, NormalizeIsCanonical) {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const QPoly a = testing::random_poly(rng, 5);
    const QPoly b = testing::random_poly(rng, 5, false);
    const QPoly c = testing::random_poly(rng, 4, false);
    EXPECT_EQ(QRat::normalize(a * c, b * c), QRat::normalize(a, b));
  }
}

TEST(QRatProperty, FieldAxioms) {
  std::mt19937 rng(99);
  auto random_rat = [&] {
    return QRat::normalize(testing::random_poly(rng, 4), testing::random_poly(rng, 4, false));
  };
  for (int iter = 0; iter < 150; ++iter) {
    const QRat f = random_rat();
    const QRat g = random_rat();
    const QRat h = random_rat();
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f - f, QRat());
    if (!f.is_zero()) EXPECT_EQ(f * f.inverse(), QRat(1));
  }
}

TEST(QRatProperty, EvaluationIsHomomorphic) {
  std::mt19937 rng(5);
  const BigRat at(7, 3);
  for (int iter = 0; iter < 100; ++iter) {
    const QRat f = QRat::normalize(testing::random_poly(rng, 4), testing::random_poly(rng, 3, false));
    const QRat g = QRat::normalize(testing::random_poly(rng, 4), testing::random_poly(rng, 3, false));
    try {
      const BigRat fv = f(at);
      const BigRat gv = g(at);
      EXPECT_EQ((f * g)(at), fv * gv);
      EXPECT_EQ((f + g)(at), fv + gv);
    } catch (const DomainError&) {
      // 7/3 happened to be a pole; skip
    }
  }
}

TEST(QRatProperty, SubstPowerIsHomomorphism) {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    const QRat f = QRat::normalize(testing::random_poly(rng, 4), testing::random_poly(rng, 3, false));
    const QRat g = QRat::normalize(testing::random_poly(rng, 4), testing::random_poly(rng, 3, false));
    const unsigned m = 1 + iter % 4;
    EXPECT_EQ(subst_power(f * g, m), subst_power(f, m) * subst_power(g, m));
    EXPECT_EQ(subst_power(f + g, m), subst_power(f, m) + subst_power(g, m));
  }
  EXPECT_EQ(subst_power(QRat::normalize(q_integer(5), QPoly(1)), 1), QRat(q_integer(5)));
  for (unsigned m = 1; m <= 4; ++m) {
    for (int k = 0; k <= 6; ++k) {
      // [k]_{q^m} = (q^{mk} - 1)/(q^m - 1)
      const QRat expected = QRat::normalize(QPoly::monomial(BigRat(1), m * k) - QPoly(1),
                                            QPoly::monomial(BigRat(1), m) - QPoly(1));
      EXPECT_EQ(subst_power(QRat(q_integer(k)), m), expected);
    }
  }
}

}  // namespace
}  // namespace qf
