#include "mlab/theory/gaussian_volume.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mlab {

LevinsonResult levinson_durbin(const std::vector<double>& c) {
  if (c.empty()) {
    throw std::invalid_argument("levinson_durbin: empty autocovariance");
  }
  if (!(c[0] > 0.0)) {
    throw std::invalid_argument(
        "levinson_durbin: leading minor of order 1 is not positive definite");
  }
  const std::size_t m = c.size();
  LevinsonResult out;
  out.innovation_var = c[0];
  out.ar.reserve(m - 1);
  out.reflection.reserve(m - 1);
  std::vector<double> prev;
  for (std::size_t order = 1; order < m; ++order) {
    double acc = c[order];
    for (std::size_t j = 1; j < order; ++j) acc -= prev[j - 1] * c[order - j];
    double kappa = acc / out.innovation_var;
    std::vector<double> cur(order);
    cur[order - 1] = kappa;
    for (std::size_t j = 1; j < order; ++j) {
      cur[j - 1] = prev[j - 1] - kappa * prev[order - 1 - j];
    }
    out.innovation_var *= 1.0 - kappa * kappa;
    if (!(out.innovation_var > 0.0)) {
      throw std::invalid_argument(
          "levinson_durbin: leading minor of order " +
          std::to_string(order + 1) + " is not positive definite");
    }
    out.reflection.push_back(kappa);
    prev = std::move(cur);
  }
  out.ar = std::move(prev);
  return out;
}

GaussianVolumeModel gaussian_volume_propagator(const std::vector<double>& c,
                                               double theta,
                                               std::size_t grid_len) {
  if (!(theta > 0.0)) {
    throw std::invalid_argument(
        "gaussian_volume_propagator: theta must be positive");
  }
  LevinsonResult ld = levinson_durbin(c);
  const std::size_t len = grid_len == 0 ? c.size() : grid_len;
  const std::size_t p = ld.ar.size();

  GaussianVolumeModel out;
  out.theta = theta;
  double k0 = std::sqrt(ld.innovation_var);
  out.r_flat = theta * ld.innovation_var;

  // MA representation of the fitted AR(p): K(0) = sigma, then the AR
  // recursion driven by its own past.
  out.k.assign(len, 0.0);
  out.k[0] = k0;
  for (std::size_t t = 1; t < len; ++t) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= std::min(t, p); ++j) {
      acc += ld.ar[j - 1] * out.k[t - j];
    }
    out.k[t] = acc;
  }

  // The inverse filter is the AR polynomial itself, scaled: finite support.
  out.q.assign(len, 0.0);
  out.q[0] = 1.0 / k0;
  for (std::size_t j = 1; j <= p && j < len; ++j) out.q[j] = -ld.ar[j - 1] / k0;

  // Bare kernel: G(l) = theta K(0) sum_{m<l} Q(m) = theta (1 - partial sums
  // of the predictor weights); lag-1 grid.
  out.g.assign(len, 0.0);
  double partial = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    out.g[i] = theta * (1.0 - partial);  // G(i+1)
    if (i < p) partial += ld.ar[i];
  }
  return out;
}

}  // namespace mlab
