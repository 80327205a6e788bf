#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qfaulhaber/big_rat.hpp"

namespace qf {

/// Dense univariate polynomial in q over the rationals.
///
/// coefficients()[i] is the coefficient of q^i. The representation carries no
/// trailing zeros, so the zero polynomial is the empty sequence and degree()
/// is well defined (-1 for zero).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigRat> coefficients);
  QPoly(BigRat constant);  // NOLINT(google-explicit-constructor)
  QPoly(std::int64_t constant) : QPoly(BigRat(constant)) {}  // NOLINT

  static QPoly monomial(BigRat coefficient, std::size_t exponent);
  /// The indeterminate q itself.
  static QPoly q();

  const std::vector<BigRat>& coefficients() const { return coeffs_; }
  BigRat coefficient(std::size_t exponent) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& leading() const;

  BigRat operator()(const BigRat& at) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const BigRat& scalar);
  QPoly& operator/=(const BigRat& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigRat& s) { return a *= s; }
  friend QPoly operator*(const BigRat& s, QPoly a) { return a *= s; }
  friend QPoly operator/(QPoly a, const BigRat& s) { return a /= s; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();

  std::vector<BigRat> coeffs_;
};

/// base^exponent for exponent >= 0 (0^0 = 1).
QPoly pow(const QPoly& base, int exponent);

/// Euclidean division over Q: a = quotient * b + remainder, deg remainder < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// p(q^m) for m >= 1.
QPoly subst_power(const QPoly& p, unsigned m);

/// Coefficients of p(1 + e) as a polynomial in e.
QPoly shift_to_one(const QPoly& p);

}  // namespace qf
