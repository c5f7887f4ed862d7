#pragma once

#include <cstddef>
#include <vector>

namespace mlab {

// A quantity indexed by lag, with per-lag standard errors.
// Lags are typically 1..L but may be any increasing grid.
struct LaggedCurve {
  std::vector<double> lag;
  std::vector<double> value;
  std::vector<double> se;

  std::size_t size() const { return lag.size(); }
};

struct PowerLawFit {
  double exponent = 0.0;    // slope of log(value) vs log(lag)
  double prefactor = 0.0;   // exp(intercept)
  double exponent_se = 0.0;
  double r2 = 0.0;
  std::size_t n_used = 0;
};

// OLS of log(value) on log(lag) over lag in [lag_min, lag_max].
// Non-positive values are skipped; n_used reports the points kept.
PowerLawFit loglog_fit(const LaggedCurve& curve, double lag_min,
                       double lag_max);

// Same, with sign folded out: fits |value| and reports the dominant sign
// of the fitted window in prefactor's sign.
PowerLawFit loglog_fit_abs(const LaggedCurve& curve, double lag_min,
                           double lag_max);

}  // namespace mlab
