#include "qfaulhaber/eps_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qfaulhaber/errors.hpp"

namespace qf {

namespace {

// Power series quotient num/den with den[0] != 0, first `terms` coefficients.
std::vector<BigRat> divide_power_series(const std::vector<BigRat>& num,
                                        const std::vector<BigRat>& den, std::size_t terms) {
  std::vector<BigRat> out(terms);
  const BigRat inv0 = den.front().inverse();
  for (std::size_t i = 0; i < terms; ++i) {
    BigRat acc = i < num.size() ? num[i] : BigRat(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * out[i - j];
    out[i] = acc * inv0;
  }
  return out;
}

std::size_t low_valuation(const QPoly& p) {
  const auto& c = p.coefficients();
  std::size_t v = 0;
  while (c[v].is_zero()) ++v;
  return v;
}

}  // namespace

EpsSeries::EpsSeries(int offset, std::vector<BigRat> coefficients, int order)
    : offset_(offset), coeffs_(std::move(coefficients)), order_(order) {
  const int keep = std::max(0, order_ - offset_);
  if (coeffs_.size() > static_cast<std::size_t>(keep)) coeffs_.resize(static_cast<std::size_t>(keep));
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset_ = coeffs_.empty() ? order_ : offset_ + static_cast<int>(lead);
}

BigRat EpsSeries::coefficient(int exponent) const {
  if (exponent >= order_) throw SeriesError("coefficient beyond series truncation");
  if (exponent < offset_) return BigRat(0);
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

EpsSeries EpsSeries::inverse() const {
  if (is_zero()) throw SeriesError("order too small");
  // e^v (c0 + ...) + O(e^N) carries N - v relative digits; so does the inverse.
  const int relative = order_ - offset_;
  std::vector<BigRat> one{BigRat(1)};
  return EpsSeries(-offset_, divide_power_series(one, coeffs_, static_cast<std::size_t>(relative)),
                   relative - offset_);
}

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
  const int order = std::min(a.order_, b.order_);
  const int offset = std::min(a.offset_, b.offset_);
  if (offset >= order) return EpsSeries::zero(order);
  std::vector<BigRat> out(static_cast<std::size_t>(order - offset));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int e = a.offset_ + static_cast<int>(i);
    if (e < order) out[static_cast<std::size_t>(e - offset)] += a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    const int e = b.offset_ + static_cast<int>(i);
    if (e < order) out[static_cast<std::size_t>(e - offset)] += b.coeffs_[i];
  }
  return EpsSeries(offset, std::move(out), order);
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) { return a + (-b); }

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  const int order = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
  const int offset = a.offset_ + b.offset_;
  if (a.is_zero() || b.is_zero() || offset >= order) return EpsSeries::zero(order);
  const auto terms = static_cast<std::size_t>(order - offset);
  std::vector<BigRat> out(terms);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < terms; ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < terms; ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return EpsSeries(offset, std::move(out), order);
}

EpsSeries operator*(const EpsSeries& a, const BigRat& s) {
  if (s.is_zero()) return EpsSeries::zero(a.order_);
  EpsSeries out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

EpsSeries laurent_at_1(const QRat& f, int order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  if (f.is_zero()) return EpsSeries::zero(order);

  const QPoly num = shift_to_one(f.num());
  const QPoly den = shift_to_one(f.den());
  const std::size_t vn = low_valuation(num);
  const std::size_t vd = low_valuation(den);
  const int valuation = static_cast<int>(vn) - static_cast<int>(vd);
  if (valuation >= order) throw SeriesError("order too small");

  const std::vector<BigRat> n(num.coefficients().begin() + static_cast<std::ptrdiff_t>(vn),
                              num.coefficients().end());
  const std::vector<BigRat> d(den.coefficients().begin() + static_cast<std::ptrdiff_t>(vd),
                              den.coefficients().end());
  return EpsSeries(valuation, divide_power_series(n, d, static_cast<std::size_t>(order - valuation)),
                   order);
}

EpsSeries l_series(int order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  // log(1 + e) / e = sum_i (-1)^i e^i / (i + 1)
  std::vector<BigRat> log_over_e;
  log_over_e.reserve(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) log_over_e.emplace_back(i % 2 == 0 ? 1 : -1, i + 1);
  return EpsSeries(0, divide_power_series({BigRat(1)}, log_over_e, static_cast<std::size_t>(order)),
                   order);
}

}  // namespace qf
