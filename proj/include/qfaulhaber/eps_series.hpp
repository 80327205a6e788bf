#pragma once

#include <vector>

#include "qfaulhaber/big_rat.hpp"
#include "qfaulhaber/qrat.hpp"

namespace qf {

/// Truncated Laurent series in e = q - 1:
///
///   sum_i coefficients()[i] * e^(offset() + i)  +  O(e^order())
///
/// The leading stored coefficient is nonzero; a series with no stored
/// coefficients is zero up to its truncation and has offset() == order().
class EpsSeries {
 public:
  EpsSeries() = default;
  EpsSeries(int offset, std::vector<BigRat> coefficients, int order);

  static EpsSeries zero(int order) { return EpsSeries(order, {}, order); }

  int offset() const { return offset_; }
  int order() const { return order_; }
  const std::vector<BigRat>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of e^exponent; SeriesError if exponent >= order().
  BigRat coefficient(int exponent) const;

  EpsSeries inverse() const;

  friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator*(const EpsSeries& a, const BigRat& s);
  friend EpsSeries operator/(const EpsSeries& a, const EpsSeries& b) { return a * b.inverse(); }
  EpsSeries operator-() const;

  friend bool operator==(const EpsSeries& a, const EpsSeries& b) = default;

 private:
  int offset_ = 0;
  std::vector<BigRat> coeffs_;
  int order_ = 0;
};

/// Laurent expansion of f at q = 1 (q = 1 + e), truncated at O(e^order).
/// The zero function gives the zero series; a nonzero f whose first nonzero
/// coefficient sits at or beyond `order` raises SeriesError("order too small").
EpsSeries laurent_at_1(const QRat& f, int order);

/// e / log(1 + e) truncated at O(e^order): the expansion of L = (q - 1)/log q
/// at q = 1 (Gregory coefficients 1, 1/2, -1/12, 1/24, -19/720, ...).
EpsSeries l_series(int order);

}  // namespace qf
