#pragma once
// Propagator that renders correlated order flow statistically efficient when
// the flow is a correlated Gaussian sequence.  The sign autocovariance is
// factored into a causal moving-average kernel K (innovations
// representation, computed by the Levinson-Durbin recursion); the bare
// kernel then follows from the inverse filter and is flat-response by
// construction.

#include <cstddef>
#include <vector>

namespace mlab {

struct LevinsonResult {
  std::vector<double> ar;          // one-step predictor weights a_1..a_{M-1}
  std::vector<double> reflection;  // partial autocorrelations, one per order
  double innovation_var = 0.0;     // residual variance at full order
};

// Solve the Toeplitz normal equations for the autocovariances c[0..M-1]
// (c[0] is the variance).  Rejects sequences that are not positive definite
// on the grid, naming the failing leading minor.
LevinsonResult levinson_durbin(const std::vector<double>& c);

struct GaussianVolumeModel {
  std::vector<double> k;  // MA kernel: flow(t) = sum K(m) innov(t-m)
  std::vector<double> q;  // inverse filter: innov from flow history
  std::vector<double> g;  // bare kernel on the lag-1 grid, g[i] = G(i+1)
  double theta = 0.0;
  double r_flat = 0.0;    // the (lag-independent) response theta K(0)^2
};

// Build the exact-efficiency propagator for sign autocovariance c
// (c[0] = variance) and impact-per-surprise theta.  grid_len == 0 extends
// the output grids to c.size(); longer values continue the recursion so the
// kernel tail can be examined beyond the fitted order.
GaussianVolumeModel gaussian_volume_propagator(const std::vector<double>& c,
                                               double theta,
                                               std::size_t grid_len = 0);

}  // namespace mlab
