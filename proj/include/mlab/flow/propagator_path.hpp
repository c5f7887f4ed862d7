#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

// Midprice path built by superposing a lag-dependent kernel over a signed
// flow series:
//
//   m_t = sum_{k < t} g(t - k) * s_k + sum_{k < t} noise_k,
//
// with g given at lags 1..g.size() and held at its last value beyond that
// (a fully decayed kernel should therefore end at its asymptote). Computed
// in O(n log n) by convolving s with the kernel increments.
struct PropagatorPath {
  std::vector<double> mid;  // n + 1 values, mid[0] = 0
  std::vector<double> ret;  // ret[t] = mid[t+1] - mid[t]
};

// s: signed flow per event (e.g. the sign, or sign * f(volume)).
// g_lag1: g_lag1[j] = g(j + 1).
// noise_sd > 0 adds iid Gaussian steps to the returns.
PropagatorPath gen_propagator_path(const std::vector<double>& s,
                                   const std::vector<double>& g_lag1,
                                   double noise_sd, Rng& rng);

}  // namespace mlab
