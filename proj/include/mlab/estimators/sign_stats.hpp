#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlab/core/lagged_curve.hpp"
#include "mlab/core/stats.hpp"

namespace mlab {

struct SignAutocorr {
  LaggedCurve curve;        // C_l for l = 1..L, normalized by the variance
  double c0 = 1.0;          // lag-0 value, reported separately
  PowerLawFit fit;          // log-log fit over [fit_lo, fit_hi]
  bool degenerate = false;  // constant input; curve left at zero
};

// Sample sign autocorrelation with a power-law tail fit. Requires
// n >= 10 * max_lag. SEs use the iid 1/sqrt(pairs) scale; they are meant
// for zero-tests, not for the long-memory fit (whose uncertainty is
// reported across seeds instead).
SignAutocorr sign_autocorr(const std::vector<int>& sign, std::size_t max_lag,
                           double fit_lo = 10.0, double fit_hi = 0.0);

struct AgentDecomposition {
  LaggedCurve same;  // E[eps_n eps_{n+l} | same agent label]
  LaggedCurve diff;  // E[eps_n eps_{n+l} | different labels]
  LaggedCurve all;   // unconditional
};

// Conditional sign autocorrelations split by agent label equality.
AgentDecomposition decompose_by_agent(const std::vector<int>& sign,
                                      const std::vector<std::int64_t>& agent,
                                      std::size_t max_lag);

// Hill tail-index estimate over the top fraction of a positive sample.
// Requires n * top_fraction >= 50.
TailFit tail_index(const std::vector<double>& sample, double top_fraction);

}  // namespace mlab
