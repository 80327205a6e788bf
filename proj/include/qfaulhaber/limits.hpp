#pragma once

#include "qfaulhaber/big_rat.hpp"
#include "qfaulhaber/lext.hpp"
#include "qfaulhaber/qrat.hpp"

namespace qf {

inline constexpr int kDefaultSeriesOrderCap = 64;

struct LimitOptions {
  /// Starting truncation order; the effective start is max(4, order_hint).
  int order_hint = 4;
  /// Truncation order is doubled up to this cap before giving up.
  int order_cap = kDefaultSeriesOrderCap;
};

/// lim_{q -> 1} f. SeriesError("pole at q=1") if f has a genuine pole there.
BigRat limit_at_1(const QRat& f, const LimitOptions& options = {});

/// lim_{q -> 1} (a + b L), combining both parts through the expansion of L.
/// SeriesError("pole at q=1") or SeriesError("order cap") on failure.
BigRat limit_at_1(const LExt& x, const LimitOptions& options = {});

}  // namespace qf
