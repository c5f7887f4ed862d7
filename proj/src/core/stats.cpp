#include "mlab/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mlab/core/lagged_curve.hpp"

namespace mlab {

double mean(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("mean: empty input");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("variance: need >= 2 points");
  double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

double sd(std::span<const double> x) { return std::sqrt(variance(x)); }

double kurtosis(std::span<const double> x) {
  if (x.size() < 4) throw std::invalid_argument("kurtosis: need >= 4 points");
  double m = mean(x);
  double s2 = 0.0, s4 = 0.0;
  for (double v : x) {
    double d = v - m;
    s2 += d * d;
    s4 += d * d * d * d;
  }
  double n = static_cast<double>(x.size());
  s2 /= n;
  s4 /= n;
  return s4 / (s2 * s2);
}

double standard_error(std::span<const double> x) {
  return sd(x) / std::sqrt(static_cast<double>(x.size()));
}

double quantile(std::vector<double> x, double p) {
  if (x.empty()) throw std::invalid_argument("quantile: empty input");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile: p outside [0,1]");
  std::sort(x.begin(), x.end());
  double h = p * (static_cast<double>(x.size()) - 1.0);
  std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= x.size()) return x.back();
  double frac = h - static_cast<double>(lo);
  return x[lo] + frac * (x[lo + 1] - x[lo]);
}

LinearFit ols(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("ols: need matched inputs with >= 3 points");
  double n = static_cast<double>(x.size());
  double mx = mean(x), my = mean(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("ols: degenerate x");
  LinearFit fit;
  fit.n = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - fit.intercept - fit.slope * x[i];
    ss_res += r * r;
  }
  double dof = n - 2.0;
  double s2 = dof > 0 ? ss_res / dof : 0.0;
  fit.slope_se = std::sqrt(s2 / sxx);
  fit.intercept_se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  fit.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

LinearFit ols_through_origin(std::span<const double> x,
                             std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ols_through_origin: need >= 2 points");
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  if (sxx == 0.0) throw std::invalid_argument("ols_through_origin: degenerate x");
  LinearFit fit;
  fit.n = x.size();
  fit.slope = sxy / sxx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - fit.slope * x[i];
    ss_res += r * r;
  }
  double dof = static_cast<double>(x.size()) - 1.0;
  fit.slope_se = std::sqrt((dof > 0 ? ss_res / dof : 0.0) / sxx);
  fit.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

double batch_mean_se(std::span<const double> x, std::size_t batch_len) {
  if (x.size() < 9) return standard_error(x);
  if (batch_len == 0) {
    batch_len = static_cast<std::size_t>(
        std::pow(static_cast<double>(x.size()), 2.0 / 3.0));
  }
  std::size_t n_batches = x.size() / batch_len;
  if (n_batches < 2) return standard_error(x);
  std::vector<double> bm(n_batches);
  for (std::size_t b = 0; b < n_batches; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < batch_len; ++i) s += x[b * batch_len + i];
    bm[b] = s / static_cast<double>(batch_len);
  }
  return sd(bm) / std::sqrt(static_cast<double>(n_batches));
}

TailFit hill_tail(std::vector<double> x, double top_fraction) {
  if (x.size() < 10) throw std::invalid_argument("hill_tail: need >= 10 points");
  if (top_fraction <= 0.0 || top_fraction > 1.0)
    throw std::invalid_argument("hill_tail: top_fraction outside (0,1]");
  for (double& v : x) v = std::abs(v);
  std::sort(x.begin(), x.end());
  std::size_t k = static_cast<std::size_t>(
      top_fraction * static_cast<double>(x.size()));
  k = std::min(std::max<std::size_t>(k, 2), x.size() - 1);
  double threshold = x[x.size() - 1 - k];
  if (threshold <= 0.0)
    throw std::invalid_argument("hill_tail: non-positive threshold");
  double s = 0.0;
  for (std::size_t i = x.size() - k; i < x.size(); ++i)
    s += std::log(x[i] / threshold);
  if (s <= 0.0) throw std::invalid_argument("hill_tail: degenerate tail");
  TailFit fit;
  fit.k = k;
  fit.threshold = threshold;
  fit.alpha = static_cast<double>(k) / s;
  fit.alpha_se = fit.alpha / std::sqrt(static_cast<double>(k));
  fit.ci_lo = fit.alpha - 1.96 * fit.alpha_se;
  fit.ci_hi = fit.alpha + 1.96 * fit.alpha_se;
  return fit;
}

std::vector<std::size_t> equal_count_bins(std::span<const double> x,
                                          std::size_t n_bins) {
  if (n_bins == 0) throw std::invalid_argument("equal_count_bins: n_bins == 0");
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<std::size_t> bin(x.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    bin[order[r]] = std::min(n_bins - 1, r * n_bins / x.size());
  }
  return bin;
}

PowerLawFit loglog_fit(const LaggedCurve& curve, double lag_min,
                       double lag_max) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve.lag[i] < lag_min || curve.lag[i] > lag_max) continue;
    if (!(curve.value[i] > 0.0) || !(curve.lag[i] > 0.0)) continue;
    lx.push_back(std::log(curve.lag[i]));
    ly.push_back(std::log(curve.value[i]));
  }
  if (lx.size() < 3)
    throw std::invalid_argument("loglog_fit: fewer than 3 usable points");
  LinearFit f = ols(lx, ly);
  PowerLawFit out;
  out.exponent = f.slope;
  out.prefactor = std::exp(f.intercept);
  out.exponent_se = f.slope_se;
  out.r2 = f.r2;
  out.n_used = f.n;
  return out;
}

PowerLawFit loglog_fit_abs(const LaggedCurve& curve, double lag_min,
                           double lag_max) {
  LaggedCurve folded = curve;
  double sign_sum = 0.0;
  for (std::size_t i = 0; i < folded.size(); ++i) {
    if (folded.lag[i] >= lag_min && folded.lag[i] <= lag_max)
      sign_sum += folded.value[i] > 0 ? 1.0 : -1.0;
    folded.value[i] = std::abs(folded.value[i]);
  }
  PowerLawFit out = loglog_fit(folded, lag_min, lag_max);
  if (sign_sum < 0) out.prefactor = -out.prefactor;
  return out;
}

}  // namespace mlab
