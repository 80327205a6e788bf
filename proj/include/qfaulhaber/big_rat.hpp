#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qf {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class BigRat {
 public:
  BigRat() = default;
  BigRat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRat(std::int64_t num, std::int64_t den);
  BigRat(const mpz_class& num, const mpz_class& den);
  explicit BigRat(const mpz_class& value);
  explicit BigRat(mpq_class value);

  /// Parses "p", "-p" or "p/r". Decimal points and exponents are rejected.
  static BigRat parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRat abs() const;
  BigRat inverse() const;
  BigRat pow(int exponent) const;

  BigRat& operator+=(const BigRat& rhs);
  BigRat& operator-=(const BigRat& rhs);
  BigRat& operator*=(const BigRat& rhs);
  BigRat& operator/=(const BigRat& rhs);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  BigRat operator-() const;

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b);

  /// "p" or "p/r".
  std::string to_string() const;

  /// Fixed-point rendering with exactly `digits` fractional digits, truncated
  /// toward zero. Exact: no binary floating point is involved.
  std::string to_decimal(int digits) const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& value);

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
BigRat binomial(int n, int k);

}  // namespace qf
