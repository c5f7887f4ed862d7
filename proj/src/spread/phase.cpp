#include "mlab/spread/phase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mlab/core/stats.hpp"
#include "mlab/estimators/response.hpp"
#include "mlab/estimators/sign_stats.hpp"

namespace mlab {

StrategyGains strategy_gains(double x, double y, double c1, double lambda,
                             double beta) {
  if (!(x >= 0.0) || !(y >= 0.0))
    throw std::invalid_argument("strategy_gains: x and y must be >= 0");
  if (!(std::abs(c1) < 1.0))
    throw std::invalid_argument("strategy_gains: need |c1| < 1");
  if (!(lambda >= 0.0))
    throw std::invalid_argument("strategy_gains: need lambda >= 0");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("strategy_gains: need beta in [0, 1]");

  StrategyGains g;
  g.market = lambda * x - 0.5 * y;
  g.copycat = (lambda - 1.0) * x - 0.5 * y;
  g.limit_patient = 0.5 * y * (1.0 - c1) - x;
  g.limit_impatient = 0.5 * y - x;
  g.limit_at_beta = (1.0 - beta) * g.limit_patient + beta * g.limit_impatient;
  g.provider_cap = 2.0 * x / (1.0 - c1);
  return g;
}

PhasePoint phase_point(const TradeSeries& t, std::size_t n_bins) {
  t.validate();
  const std::size_t n = t.size();
  if (t.spread.empty())
    throw std::invalid_argument("phase_point: series has no spread column");
  if (n < 256)
    throw std::invalid_argument("phase_point: need at least 256 trades");
  if (n_bins < 2 || n < 4 * n_bins)
    throw std::invalid_argument("phase_point: bad bin count");

  // Volume-weighted coordinates. R_1(v) is the mean single-trade response
  // within each equal-count volume bin, re-weighted by volume.
  std::vector<double> vols(n);
  for (std::size_t i = 0; i < n; ++i) vols[i] = t.vol(i);
  std::vector<std::size_t> bin = equal_count_bins(vols, n_bins);
  std::vector<double> bin_sum(n_bins, 0.0);
  std::vector<double> bin_cnt(n_bins, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    bin_sum[bin[i]] += t.sign[i] * t.ret(i, 1);
    bin_cnt[bin[i]] += 1.0;
  }
  double vx = 0.0, vy = 0.0, vtot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r1_v = bin_cnt[bin[i]] > 0 ? bin_sum[bin[i]] / bin_cnt[bin[i]] : 0.0;
    vx += vols[i] * r1_v;
    vy += vols[i] * t.spread[i];
    vtot += vols[i];
  }

  PhasePoint p;
  p.x = vx / vtot;
  p.y = vy / vtot;

  SignAutocorr ac = sign_autocorr(t.sign, 1);
  p.c1 = ac.degenerate ? 0.0 : ac.curve.value[0];

  std::size_t max_lag = std::min<std::size_t>(128, n / 16);
  LaggedCurve resp = response_function(t, max_lag);
  double plateau = 0.0;
  std::size_t used = 0;
  for (std::size_t l = max_lag / 2; l < max_lag; ++l) {
    plateau += resp.value[l];
    ++used;
  }
  plateau /= static_cast<double>(used);
  double r1 = resp.value[0];
  p.lambda = (std::isfinite(plateau / r1) && r1 != 0.0) ? plateau / r1 : 1.0;

  double amp = std::max(p.lambda, 1e-12);
  p.lambda_beta = std::sqrt(amp / (1.0 - p.c1));

  if (p.y > 2.0 * p.lambda * p.x) {
    p.region = "above-red";
  } else if (p.y < 2.0 * (p.lambda - 1.0) * p.x) {
    p.region = "PCC";
  } else if (p.y < 2.0 * p.x / (1.0 - p.c1)) {
    p.region = "below-blue";
  } else if (p.y > 2.0 * p.lambda_beta * p.x) {
    p.region = "PMM";
  } else {
    p.region = "neutral-wedge";
  }
  return p;
}

}  // namespace mlab
