#include "mlab/flow/propagator_path.hpp"

#include <stdexcept>

#include "mlab/core/fft.hpp"

namespace mlab {

PropagatorPath gen_propagator_path(const std::vector<double>& s,
                                   const std::vector<double>& g_lag1,
                                   double noise_sd, Rng& rng) {
  if (g_lag1.empty()) {
    throw std::invalid_argument("gen_propagator_path: empty kernel");
  }
  const std::size_t n = s.size();
  PropagatorPath out;
  out.ret.assign(n, 0.0);
  out.mid.assign(n + 1, 0.0);
  if (n == 0) return out;

  // ret[t] = sum_{k <= t} dg(t - k) s_k with dg(j) = g(j+1) - g(j), g(0) = 0.
  // The kernel plateaus past its last point, so dg vanishes there and the
  // convolution kernel can be truncated at min(n, g.size()).
  std::size_t m = std::min(n, g_lag1.size());
  std::vector<double> dg(m);
  dg[0] = g_lag1[0];
  for (std::size_t j = 1; j < m; ++j) dg[j] = g_lag1[j] - g_lag1[j - 1];

  std::vector<double> conv = fft_convolve(s, dg);
  for (std::size_t t = 0; t < n; ++t) out.ret[t] = conv[t];
  if (noise_sd > 0.0) {
    for (std::size_t t = 0; t < n; ++t) out.ret[t] += noise_sd * rng.normal();
  }
  for (std::size_t t = 0; t < n; ++t) out.mid[t + 1] = out.mid[t] + out.ret[t];
  return out;
}

}  // namespace mlab
