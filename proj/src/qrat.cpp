#include "qfaulhaber/qrat.hpp"

#include "qfaulhaber/errors.hpp"

namespace qf {

namespace {

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  if (b.is_constant()) return a / b.leading();
  return divmod(a, b).first;
}

}  // namespace

QRat::QRat(QPoly polynomial) : num_(std::move(polynomial)), den_(1) {}

QRat QRat::normalize(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DomainError("division by zero polynomial");
  if (num.is_zero()) return QRat();
  const QPoly g = gcd(num, den);
  QPoly n = exact_quotient(num, g);
  QPoly d = exact_quotient(den, g);
  const BigRat lead = d.leading();
  if (!lead.is_one()) {
    n /= lead;
    d /= lead;
  }
  return QRat(std::move(n), std::move(d), Canonical{});
}

const QPoly& QRat::as_polynomial(const char* context) const {
  if (!is_polynomial()) throw IdentityViolation(context);
  return num_;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DomainError("division by zero polynomial");
  return normalize(den_, num_);
}

BigRat QRat::operator()(const BigRat& at) const {
  const BigRat d = den_(at);
  if (d.is_zero()) throw DomainError("evaluation at a pole");
  return num_(at) / d;
}

QRat& QRat::operator+=(const QRat& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_constant()) {
      num_ += rhs.num_;
      return *this;
    }
    return *this = normalize(num_ + rhs.num_, den_);
  }
  // With one side polynomial, a/b + c = (a + c b)/b is already reduced.
  if (rhs.den_.is_constant()) {
    num_ += rhs.num_ * den_;
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
    return *this;
  }
  const QPoly g = gcd(den_, rhs.den_);
  const QPoly left_cofactor = exact_quotient(rhs.den_, g);
  const QPoly right_cofactor = exact_quotient(den_, g);
  return *this = normalize(num_ * left_cofactor + rhs.num_ * right_cofactor, den_ * left_cofactor);
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

QRat& QRat::operator*=(const QRat& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = QRat();
  // Cross-cancel before multiplying; the product of coprime pieces stays reduced.
  const QPoly g1 = gcd(num_, rhs.den_);
  const QPoly g2 = gcd(rhs.num_, den_);
  QPoly n = exact_quotient(num_, g1) * exact_quotient(rhs.num_, g2);
  QPoly d = exact_quotient(den_, g2) * exact_quotient(rhs.den_, g1);
  const BigRat lead = d.leading();
  if (!lead.is_one()) {
    n /= lead;
    d /= lead;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

QRat& QRat::operator/=(const QRat& rhs) { return *this *= rhs.inverse(); }

QRat QRat::operator-() const { return QRat(-num_, den_, Canonical{}); }

QRat pow(const QRat& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  // Powers of coprime polynomials stay coprime.
  return QRat(pow(base.num_, exponent), pow(base.den_, exponent), QRat::Canonical{});
}

QRat subst_power(const QRat& f, unsigned m) {
  // q -> q^m is an injective ring map, so coprimality and monicity survive.
  return QRat(subst_power(f.num_, m), subst_power(f.den_, m), QRat::Canonical{});
}

}  // namespace qf
