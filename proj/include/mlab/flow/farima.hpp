#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

// Long-memory sign machinery. Hurst exponent H in (0.5, 1); the sign
// autocorrelation decays as l^{-gamma} with gamma = 2 - 2H, and the
// associated propagator exponent scale is beta = (1 - gamma) / 2 = H - 1/2.

// Best linear predictor coefficients a_1..a_K of the next sign from the
// previous K signs, in closed Gamma-function form. All coefficients are
// positive and sum to less than 1.
std::vector<double> farima_coeffs(std::size_t k_lags, double hurst);

// Moving-average weights psi_0..psi_{n-1} of fractional integration of
// order d = H - 1/2 (psi_0 = 1, psi_j = psi_{j-1} (j - 1 + d) / j).
std::vector<double> farima_ma_weights(std::size_t n, double hurst);

struct FarimaSeries {
  std::vector<double> x;     // Gaussian long-memory path
  std::vector<int> sign;     // sign(x)
};

// Gaussian innovations convolved with the MA kernel (FFT), then clipped to
// +-1. The sign autocorrelation inherits the l^{-gamma} tail.
FarimaSeries gen_signs_farima(std::size_t n, double hurst, Rng& rng);

}  // namespace mlab
