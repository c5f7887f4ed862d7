#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/series.hpp"

namespace mlab {

// Cross-sectional relations between spread, impact, and per-trade
// volatility, estimated over a panel of series ("stocks"):
//
//   sigma1^2 = a rbar1^2 + sigma_sq_hat   (OLS across stocks)
//   E[S]     = c sigma1                   (through the origin)
//   E[v S]   = b E[v] E[S]                (through the origin)
//   E[v eps dm] = b' E[v] rbar1           (through the origin)
//
// where rbar1 = E[eps dm] is the plain single-trade response and sigma1^2
// the variance of one-trade midpoint changes, per stock. b and b' measure
// how far spread and impact are from volume-independent.
struct SpreadVolRelation {
  double a = 0.0;
  double sigma_sq_hat = 0.0;
  double c = 0.0;
  double b = 0.0;
  double b_prime = 0.0;
  std::size_t n_stocks = 0;
};

// Requires >= 10 series, each with a spread column and >= 16 trades.
// Degenerate regressors (no cross-sectional variation) are an error.
SpreadVolRelation spread_vol_relation(const std::vector<TradeSeries>& stocks);

}  // namespace mlab
