#include "qfaulhaber/render.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace qf {

namespace {

struct Term {
  BigRat coefficient;
  std::size_t exponent;
};

std::vector<Term> terms_of(const QPoly& p, bool descending) {
  std::vector<Term> out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) out.push_back({c[i], i});
  }
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

std::string latex_rational(const BigRat& magnitude) {
  if (magnitude.is_integer()) return magnitude.to_string();
  return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
}

std::string term_body(const BigRat& magnitude, std::size_t exponent, bool latex) {
  if (exponent == 0) return latex ? latex_rational(magnitude) : magnitude.to_string();
  std::string coeff;
  if (!magnitude.is_one()) {
    if (latex) {
      coeff = latex_rational(magnitude);
    } else {
      coeff = magnitude.is_integer() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
    }
  }
  std::string var = "q";
  if (exponent > 1) {
    var += latex ? "^{" + std::to_string(exponent) + "}" : "^" + std::to_string(exponent);
  }
  return coeff + var;
}

std::string render_terms(const QPoly& p, bool descending, bool latex) {
  const auto terms = terms_of(p, descending);
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool negative = terms[i].coefficient.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_body(terms[i].coefficient.abs(), terms[i].exponent, latex);
  }
  return out;
}

std::string csv_row(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i != 0) out += ",";
    out += p.coefficients()[i].to_string();
  }
  return out;
}

class PlainParser {
 public:
  explicit PlainParser(std::string_view text) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) text_ += c;
    }
  }

  QPoly parse() {
    if (text_.empty()) fail();
    QPoly total;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_++] == '-';
      } else if (!first) {
        fail();
      }
      first = false;
      BigRat coeff = term_coefficient();
      std::size_t exponent = 0;
      bool has_var = false;
      if (peek() == 'q') {
        ++pos_;
        has_var = true;
        exponent = 1;
        if (peek() == '^') {
          ++pos_;
          exponent = std::stoul(digits());
        }
      }
      if (!has_coeff_ && !has_var) fail();
      total += QPoly::monomial(negative ? -coeff : coeff, exponent);
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed polynomial: '" + text_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (start == pos_) fail();
    return text_.substr(start, pos_ - start);
  }

  BigRat term_coefficient() {
    has_coeff_ = true;
    if (peek() == '(') {
      ++pos_;
      std::string literal = digits();
      if (peek() == '/') {
        ++pos_;
        literal += "/" + digits();
      }
      if (peek() != ')') fail();
      ++pos_;
      return BigRat::parse(literal);
    }
    if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      std::string literal = digits();
      if (peek() == '/') {
        ++pos_;
        literal += "/" + digits();
      }
      return BigRat::parse(literal);
    }
    has_coeff_ = false;
    return BigRat(1);
  }

  std::string text_;
  std::size_t pos_ = 0;
  bool has_coeff_ = false;
};

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  return std::nullopt;
}

std::string render(const BigRat& value, OutputFormat format) {
  if (format != OutputFormat::Latex) return value.to_string();
  return (value.sign() < 0 ? "-" : "") + latex_rational(value.abs());
}

std::string render(const QPoly& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain: return render_terms(p, false, false);
    case OutputFormat::Csv: return csv_row(p);
    case OutputFormat::Latex: return render_terms(p, false, true);
  }
  return {};
}

std::string render(const QRat& f, OutputFormat format) {
  if (format == OutputFormat::Csv) return csv_row(f.num()) + "\n" + csv_row(f.den());
  const bool latex = format == OutputFormat::Latex;
  const std::string num = render_terms(f.num(), false, latex);
  if (f.is_polynomial()) return num;
  const std::string den = render_terms(f.den(), true, latex);
  if (latex) return "\\frac{" + num + "}{" + den + "}";
  const bool single_term = terms_of(f.num(), false).size() == 1;
  return (single_term ? num : "(" + num + ")") + "/(" + den + ")";
}

std::string render(const LExt& x, OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain:
      return "rat: " + render(x.rat_part(), format) + ", log: " + render(x.log_part(), format);
    case OutputFormat::Csv:
      return render(x.rat_part(), format) + "\n" + render(x.log_part(), format);
    case OutputFormat::Latex:
      return "\\left(" + render(x.rat_part(), format) + ",\\ " + render(x.log_part(), format) +
             "\\right)";
  }
  return {};
}

QPoly parse_plain(std::string_view text) { return PlainParser(text).parse(); }

QPoly parse_csv(std::string_view text) {
  std::vector<BigRat> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string cell(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    std::erase_if(cell, [](unsigned char c) { return std::isspace(c) != 0; });
    coeffs.push_back(BigRat::parse(cell));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return QPoly(std::move(coeffs));
}

}  // namespace qf
