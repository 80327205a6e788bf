#include "qfaulhaber/qpoly.hpp"

#include <algorithm>

#include "qfaulhaber/errors.hpp"

namespace qf {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divide out the content and make the leading coefficient positive.
void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) break;
  }
  if (p.back() < 0) content = -content;
  if (content != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
}

IntPoly to_primitive(const QPoly& p) {
  mpz_class common_den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    out.emplace_back(c.raw().get_num() * (common_den / c.raw().get_den()));
  }
  make_primitive(out);
  return out;
}

// Primitive part of the pseudo-remainder of a by b (deg a >= deg b >= 0).
IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const mpz_class& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  make_primitive(a);
  return a;
}

}  // namespace

QPoly::QPoly(std::vector<BigRat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly::QPoly(BigRat constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QPoly QPoly::monomial(BigRat coefficient, std::size_t exponent) {
  if (coefficient.is_zero()) return {};
  std::vector<BigRat> coeffs(exponent + 1);
  coeffs[exponent] = std::move(coefficient);
  return QPoly(std::move(coeffs));
}

QPoly QPoly::q() { return monomial(BigRat(1), 1); }

BigRat QPoly::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigRat(0);
}

const BigRat& QPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRat QPoly::operator()(const BigRat& at) const {
  BigRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
    }
  }
  std::vector<BigRat> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.emplace_back(std::move(c));
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const BigRat& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPoly& QPoly::operator/=(const BigRat& scalar) {
  if (scalar.is_zero()) throw DomainError("division by zero");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly pow(const QPoly& base, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial power");
  QPoly result(1);
  QPoly square = base;
  while (exponent != 0) {
    if ((exponent & 1) != 0) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};

  std::vector<BigRat> rem = a.coefficients();
  std::vector<BigRat> quot(rem.size() - b.coefficients().size() + 1);
  const auto& bc = b.coefficients();
  const BigRat inv_lead = b.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRat factor = rem[k + bc.size() - 1] * inv_lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= factor * bc[i];
  }
  rem.resize(bc.size() - 1);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b / b.leading();
  if (b.is_zero()) return a / a.leading();
  if (a.is_constant() || b.is_constant()) return QPoly(1);

  IntPoly x = to_primitive(a);
  IntPoly y = to_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return QPoly(1);
    IntPoly r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<BigRat> out;
  out.reserve(x.size());
  for (const auto& c : x) out.emplace_back(c, x.back());
  return QPoly(std::move(out));
}

QPoly subst_power(const QPoly& p, unsigned m) {
  if (m == 0) throw DomainError("substitution exponent must be positive");
  if (m == 1 || p.is_constant()) return p;
  std::vector<BigRat> out(static_cast<std::size_t>(p.degree()) * m + 1);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) out[i * m] = p.coefficients()[i];
  return QPoly(std::move(out));
}

QPoly shift_to_one(const QPoly& p) {
  // Horner in the shifted variable: acc <- acc * (1 + e) + c_i.
  std::vector<BigRat> acc;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    acc.emplace_back();
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] += acc[i - 1];
    acc[0] += *it;
  }
  return QPoly(std::move(acc));
}

}  // namespace qf
