#pragma once

#include <cstddef>
#include <string>

#include "mlab/core/series.hpp"

namespace mlab {

// Volume-weighted gains of stylized strategies, all per unit volume, in
// the plane x = E[v R_1(v)] / E[v] (impact) vs y = E[v S] / E[v] (spread).
//
//   market orders:     lambda x - y/2         (zero on the line y = 2 lambda x)
//   copy-cat taker:    (lambda - 1) x - y/2   (trades after, skips own impact)
//   patient provider:  y (1 - c1)/2 - x       (participation rate -> 0)
//   impatient provider: y/2 - x               (participation rate -> 1)
//
// provider_cap is the spread 2 x / (1 - c1) at which the patient provider
// breaks even: no strategy-free liquidity above it. limit_at_beta blends
// the two provider limits linearly in the participation exponent beta; no
// closed form exists in between, so it is a labeled numeric interpolation.
struct StrategyGains {
  double market = 0.0;
  double copycat = 0.0;
  double limit_patient = 0.0;
  double limit_impatient = 0.0;
  double limit_at_beta = 0.0;
  double provider_cap = 0.0;
};

// Requires x, y >= 0, |c1| < 1, lambda >= 0, beta in [0, 1].
StrategyGains strategy_gains(double x, double y, double c1, double lambda,
                             double beta = 0.5);

// Where a market sits in the (x, y) plane, with the lines that bound the
// strategy-gain regions:
//
//   red    y = 2 lambda x        market orders break even
//   black  y = 2 lambda_beta x   market making breaks even (interpolated)
//   blue   y = 2 x / (1 - c1)    patient limit orders break even
//   green  y = 2 (lambda - 1) x  copy-cat takers break even
//
// region is the most specific label that applies: "above-red" (taking
// costs), "PCC" (profitable copy-cat), "below-blue" (liquidity is free),
// "PMM" (profitable market making), else "neutral-wedge".
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double c1 = 0.0;
  double lambda = 1.0;
  double lambda_beta = 1.0;  // geometric mean of 1/(1-c1) and lambda:
                             // numeric stand-in, no closed form
  std::string region;
};

// Measures x, y, c1, lambda from a trade series. R_1(v) uses n_bins
// equal-count volume bins; lambda is the response plateau (top half of the
// measured lags) over R_1. Requires a spread column and >= 256 trades.
PhasePoint phase_point(const TradeSeries& t, std::size_t n_bins = 10);

}  // namespace mlab
