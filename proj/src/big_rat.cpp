#include "qfaulhaber/big_rat.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "qfaulhaber/errors.hpp"

namespace qf {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");

mpz_class from_int64(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigRat::BigRat(std::int64_t value) : value_(from_int64(value)) {}

BigRat::BigRat(std::int64_t num, std::int64_t den) : BigRat(from_int64(num), from_int64(den)) {}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRat::BigRat(const mpz_class& value) : value_(value) {}

BigRat::BigRat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRat BigRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text));
  if (slash == std::string_view::npos) return BigRat(num);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  }
  mpz_class den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return BigRat(num, den);
}

BigRat BigRat::abs() const { return BigRat(mpq_class(::abs(value_))); }

BigRat BigRat::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return BigRat(value_.get_den(), value_.get_num());
}

BigRat BigRat::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRat(num, den);
}

BigRat& BigRat::operator+=(const BigRat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-value_)); }

std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigRat::to_string() const { return value_.get_str(); }

std::string BigRat::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  mpz_class scaled = ::abs(value_.get_num()) * scale;
  mpz_class quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());

  std::string body = quotient.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sign() < 0 ? "-" : "") + body;
}

std::ostream& operator<<(std::ostream& os, const BigRat& value) { return os << value.to_string(); }

BigRat binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return BigRat(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRat(out);
}

}  // namespace qf
