#pragma once

#include <vector>

namespace mlab {

// Linear cumulative book implied by break-even liquidity provision against
// informed flow: a provider adds depth at price p while the expected gain
// conditional on execution clears a floor g_min, informed volume is
// proportional (by `alpha`) to the forecast move, and forecasts are
// exponentially distributed with rate `beta`. The cumulative volume priced
// at or below p = m + d is then
//
//   depth(d) = alpha d - alpha (g_min + 1 / beta),
//
// a straight line whose intercept the model requires to be negative.
struct GlostenSandasBook {
  std::vector<double> distance;  // price offsets d = p - m
  std::vector<double> depth;     // model cumulative volume at each offset
  double slope = 0.0;            // alpha
  double intercept = 0.0;        // -alpha (g_min + 1 / beta)
};

GlostenSandasBook glosten_sandas_book(double alpha, double g_min, double beta,
                                      std::vector<double> distance);

// The same model prices market-order impact linearly in volume.
double gs_implied_impact(double alpha, double volume);

// Straight-line fit of an observed cumulative depth profile with the sign
// diagnostic: a positive fitted intercept contradicts the model (it would
// price limit-order placement at a negative cost), so `rejected` is set.
struct GsFit {
  double slope = 0.0;
  double intercept = 0.0;
  bool rejected = false;
};

GsFit glosten_sandas_fit(const std::vector<double>& distance,
                         const std::vector<double>& cum_depth);

}  // namespace mlab
