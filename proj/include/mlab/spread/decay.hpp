#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/lagged_curve.hpp"

namespace mlab {

struct SpreadDecay {
  LaggedCurve curve;       // G(tau | delta) on the requested tau grid
  PowerLawFit fit;         // log-log fit of |G| over the grid
  std::size_t n_events = 0;
};

// Average relaxation of the spread after a jump of size delta:
//
//   G(tau | delta) = E[ S_{t+tau} | S_t - S_{t-1} = delta ] - E[S],
//
// conditioning on one-step changes matching delta to within
// 1e-9 max(1, |delta|). taus must be positive and strictly increasing.
// Fewer than 30 conditioning events is an error.
SpreadDecay spread_decay(const std::vector<double>& spread, double delta,
                         const std::vector<std::size_t>& taus);

}  // namespace mlab
