#pragma once

#include "qfaulhaber/qpoly.hpp"

namespace qf {

/// Rational function in q, held in canonical form: gcd(num, den) = 1 and den
/// monic. Two QRat values are equal iff their canonical parts are equal.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(QPoly polynomial);  // NOLINT(google-explicit-constructor)
  QRat(BigRat constant) : QRat(QPoly(std::move(constant))) {}  // NOLINT
  QRat(std::int64_t constant) : QRat(QPoly(constant)) {}       // NOLINT

  /// Canonical reduced form of num/den. Throws DomainError on den = 0.
  static QRat normalize(const QPoly& num, const QPoly& den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The numerator, if den = 1; otherwise IdentityViolation naming `context`.
  const QPoly& as_polynomial(const char* context = "expected a polynomial") const;

  QRat inverse() const;
  /// Exact value at a rational point; DomainError at a pole.
  BigRat operator()(const BigRat& at) const;

  QRat& operator+=(const QRat& rhs);
  QRat& operator-=(const QRat& rhs);
  QRat& operator*=(const QRat& rhs);
  QRat& operator/=(const QRat& rhs);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  QRat operator-() const;

  friend bool operator==(const QRat& a, const QRat& b) = default;

  friend QRat pow(const QRat& base, int exponent);
  friend QRat subst_power(const QRat& f, unsigned m);

 private:
  struct Canonical {};
  QRat(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

QRat pow(const QRat& base, int exponent);

/// f(q^m) for m >= 1, in canonical form.
QRat subst_power(const QRat& f, unsigned m);

}  // namespace qf
