#include "mlab/estimators/hurst.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/core/stats.hpp"

namespace mlab {

namespace {

// Mean R/S over non-overlapping blocks of length m.
double rescaled_range(const std::vector<double>& x, std::size_t m) {
  std::size_t n_blocks = x.size() / m;
  double total = 0.0;
  std::size_t used = 0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const double* blk = x.data() + b * m;
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += blk[i];
    mean /= static_cast<double>(m);
    double cum = 0.0, hi = 0.0, lo = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double d = blk[i] - mean;
      cum += d;
      hi = std::max(hi, cum);
      lo = std::min(lo, cum);
      ss += d * d;
    }
    double s = std::sqrt(ss / static_cast<double>(m));
    if (s > 0.0) {
      total += (hi - lo) / s;
      ++used;
    }
  }
  if (used == 0) return 0.0;
  return total / static_cast<double>(used);
}

// Finite-sample iid expectation of R/S (Anis-Lloyd, with the small-m
// bias factor (m - 1/2) / m).
double expected_rs_iid(std::size_t m) {
  double md = static_cast<double>(m);
  double sum = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    sum += std::sqrt((md - i) / static_cast<double>(i));
  }
  double pref =
      std::exp(std::lgamma(0.5 * (md - 1.0)) - std::lgamma(0.5 * md)) /
      std::sqrt(M_PI);
  return (md - 0.5) / md * pref * sum;
}

}  // namespace

HurstResult hurst(const std::vector<double>& x, HurstMethod method,
                  std::size_t q) {
  const std::size_t n = x.size();
  if (n < 1000) throw std::invalid_argument("hurst: need n >= 1000");

  HurstResult out;

  std::vector<double> log_m, log_ratio;
  for (std::size_t m = 16; m <= n / 4; m *= 2) {
    double rs = rescaled_range(x, m);
    if (rs <= 0.0) continue;
    log_m.push_back(std::log(static_cast<double>(m)));
    log_ratio.push_back(std::log(rs) - std::log(expected_rs_iid(m)));
  }
  if (log_m.size() < 3) throw std::invalid_argument("hurst: series too short");
  out.h = 0.5 + ols(log_m, log_ratio).slope;

  if (method == HurstMethod::LoModified) {
    if (q == 0) {
      q = static_cast<std::size_t>(
          std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
    }
    out.bandwidth = q;
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);

    double cum = 0.0, hi = 0.0, lo = 0.0, var = 0.0;
    for (double v : x) {
      double d = v - mean;
      cum += d;
      hi = std::max(hi, cum);
      lo = std::min(lo, cum);
      var += d * d;
    }
    var /= static_cast<double>(n);
    double sigma2 = var;
    for (std::size_t j = 1; j <= q; ++j) {
      double w = 1.0 - static_cast<double>(j) / (q + 1.0);
      double cov = 0.0;
      for (std::size_t i = j; i < n; ++i) {
        cov += (x[i] - mean) * (x[i - j] - mean);
      }
      sigma2 += 2.0 * w * cov / static_cast<double>(n);
    }
    if (sigma2 <= 0.0) throw std::runtime_error("hurst: degenerate variance");
    out.stat = (hi - lo) / (std::sqrt(static_cast<double>(n) * sigma2));
    out.reject_short_memory = out.stat < 0.809 || out.stat > 1.862;
  }
  return out;
}

}  // namespace mlab
