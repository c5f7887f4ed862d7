#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mlab {

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // unbiased (n-1)
double sd(std::span<const double> x);
double kurtosis(std::span<const double> x);  // raw E[(x-m)^4]/sd^4
double standard_error(std::span<const double> x);

// Linear interpolation quantile (R type-7), p in [0,1].
double quantile(std::vector<double> x, double p);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double intercept_se = 0.0;
  double r2 = 0.0;
  std::size_t n = 0;
};

LinearFit ols(std::span<const double> x, std::span<const double> y);
// Regression through the origin: y = slope * x.
LinearFit ols_through_origin(std::span<const double> x,
                             std::span<const double> y);

// Standard error of the mean of a dependent series via non-overlapping
// batch means; batch length defaults to floor(n^(2/3)).
double batch_mean_se(std::span<const double> x, std::size_t batch_len = 0);

struct TailFit {
  double alpha = 0.0;     // tail exponent
  double alpha_se = 0.0;  // asymptotic alpha / sqrt(k)
  double ci_lo = 0.0;     // 95% interval
  double ci_hi = 0.0;
  std::size_t k = 0;      // order statistics used
  double threshold = 0.0;
};

// Hill estimator over the top `top_fraction` of the sample (by magnitude).
// top_fraction = 1 uses every point above the sample minimum, which
// coincides with the Pareto maximum-likelihood estimate.
TailFit hill_tail(std::vector<double> x, double top_fraction);

// Equal-count binning: returns bin index per element, bins ordered by value.
std::vector<std::size_t> equal_count_bins(std::span<const double> x,
                                          std::size_t n_bins);

}  // namespace mlab
