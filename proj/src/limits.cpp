#include "qfaulhaber/limits.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qfaulhaber/eps_series.hpp"
#include "qfaulhaber/errors.hpp"

namespace qf {

namespace {

// Expansion that reports "nothing below `order`" as a zero series instead of
// failing; a limit only needs the coefficients up to e^0.
EpsSeries expand(const QRat& f, int order) {
  try {
    return laurent_at_1(f, order);
  } catch (const SeriesError&) {
    return EpsSeries::zero(order);
  }
}

BigRat adaptive_limit(const LimitOptions& options,
                      const std::function<EpsSeries(int)>& expansion_at) {
  if (options.order_cap < 1) throw std::invalid_argument("series order cap must be positive");
  int order = std::min(std::max(4, options.order_hint), options.order_cap);
  for (;;) {
    const EpsSeries s = expansion_at(order);
    if (s.order() >= 1) {
      if (s.offset() < 0) throw SeriesError("pole at q=1");
      return s.coefficient(0);
    }
    if (order >= options.order_cap) throw SeriesError("order cap");
    order = std::min(order * 2, options.order_cap);
  }
}

}  // namespace

BigRat limit_at_1(const QRat& f, const LimitOptions& options) {
  return adaptive_limit(options, [&](int order) { return expand(f, order); });
}

BigRat limit_at_1(const LExt& x, const LimitOptions& options) {
  return adaptive_limit(options, [&](int order) {
    return expand(x.rat_part(), order) + expand(x.log_part(), order) * l_series(order);
  });
}

}  // namespace qf
