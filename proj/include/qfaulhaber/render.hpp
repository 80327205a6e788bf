#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qfaulhaber/big_rat.hpp"
#include "qfaulhaber/lext.hpp"
#include "qfaulhaber/qpoly.hpp"
#include "qfaulhaber/qrat.hpp"

namespace qf {

enum class OutputFormat { Plain, Csv, Latex };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Plain: ascending exponents, "1 + q - 2q^3", non-integer coefficients as
// "(1/2)q^2". A QRat denominator is monic and is written leading term first:
// "1/(q - 1)".
// Csv: one row per polynomial, coefficients ascending from q^0 ("0" for zero).
// Latex: same term order as plain, with \frac and braced exponents.
std::string render(const BigRat& value, OutputFormat format);
std::string render(const QPoly& p, OutputFormat format);
std::string render(const QRat& f, OutputFormat format);
/// Plain "rat: A, log: B"; Csv four rows (rat num, rat den, log num, log den);
/// Latex a parenthesised pair.
std::string render(const LExt& x, OutputFormat format);

/// Inverse of render(QPoly, Plain). Terms may appear in any order.
QPoly parse_plain(std::string_view text);
/// Inverse of render(QPoly, Csv).
QPoly parse_csv(std::string_view text);

}  // namespace qf
