#pragma once

#include "qfaulhaber/qrat.hpp"

namespace qf {

/// An element rat + log * L of Q(q) + Q(q) L, where L = (q - 1)/log q is kept
/// as a formal transcendental symbol. Only the Q(q)-vector-space operations
/// exist; no product of two LExt values is needed anywhere.
class LExt {
 public:
  LExt() = default;
  LExt(QRat rat_part, QRat log_part) : rat_(std::move(rat_part)), log_(std::move(log_part)) {}
  LExt(QRat rat_part) : rat_(std::move(rat_part)) {}  // NOLINT(google-explicit-constructor)

  /// L itself, i.e. (0, 1).
  static LExt l() { return LExt(QRat(), QRat(1)); }

  const QRat& rat_part() const { return rat_; }
  const QRat& log_part() const { return log_; }

  bool is_zero() const { return rat_.is_zero() && log_.is_zero(); }
  /// True when the L component vanishes identically.
  bool is_rational() const { return log_.is_zero(); }

  LExt& operator+=(const LExt& rhs) {
    rat_ += rhs.rat_;
    log_ += rhs.log_;
    return *this;
  }
  LExt& operator-=(const LExt& rhs) {
    rat_ -= rhs.rat_;
    log_ -= rhs.log_;
    return *this;
  }
  LExt& operator*=(const QRat& s) {
    rat_ *= s;
    log_ *= s;
    return *this;
  }
  LExt& operator/=(const QRat& s) { return *this *= s.inverse(); }

  friend LExt operator+(LExt a, const LExt& b) { return a += b; }
  friend LExt operator-(LExt a, const LExt& b) { return a -= b; }
  friend LExt operator*(LExt a, const QRat& s) { return a *= s; }
  friend LExt operator*(const QRat& s, LExt a) { return a *= s; }
  friend LExt operator/(LExt a, const QRat& s) { return a /= s; }
  LExt operator-() const { return LExt(-rat_, -log_); }

  friend bool operator==(const LExt& a, const LExt& b) = default;

 private:
  QRat rat_;
  QRat log_;
};

}  // namespace qf
