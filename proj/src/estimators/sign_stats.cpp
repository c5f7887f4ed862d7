#include "mlab/estimators/sign_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "mlab/core/fft.hpp"
#include "mlab/kernels/lag_kernels.hpp"

namespace mlab {

SignAutocorr sign_autocorr(const std::vector<int>& sign, std::size_t max_lag,
                           double fit_lo, double fit_hi) {
  if (max_lag == 0) throw std::invalid_argument("sign_autocorr: max_lag == 0");
  if (sign.size() < 10 * max_lag) {
    throw std::invalid_argument("sign_autocorr: need n >= 10 * max_lag");
  }
  const std::size_t n = sign.size();
  double m = 0.0;
  for (int s : sign) m += s;
  m /= static_cast<double>(n);

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = sign[i] - m;

  SignAutocorr out;
  double var = 0.0;
  for (double v : x) var += v * v;
  var /= static_cast<double>(n);
  if (var == 0.0) {
    out.degenerate = true;
    out.curve.lag.resize(max_lag);
    out.curve.value.assign(max_lag, 0.0);
    out.curve.se.assign(max_lag, 0.0);
    for (std::size_t l = 1; l <= max_lag; ++l) {
      out.curve.lag[l - 1] = static_cast<double>(l);
    }
    return out;
  }

  auto sums = fft_autocorr_sums(x, max_lag);
  out.curve.lag.reserve(max_lag);
  out.curve.value.reserve(max_lag);
  out.curve.se.reserve(max_lag);
  for (std::size_t l = 1; l <= max_lag; ++l) {
    double pairs = static_cast<double>(n - l);
    out.curve.lag.push_back(static_cast<double>(l));
    out.curve.value.push_back(sums[l] / pairs / var);
    out.curve.se.push_back(1.0 / std::sqrt(pairs));
  }
  if (fit_hi <= 0.0) fit_hi = static_cast<double>(max_lag) / 10.0;
  try {
    out.fit = loglog_fit(out.curve, fit_lo, fit_hi);
  } catch (const std::invalid_argument&) {
    out.fit = PowerLawFit{};  // no positive tail window (e.g. white noise)
  }
  return out;
}

AgentDecomposition decompose_by_agent(const std::vector<int>& sign,
                                      const std::vector<std::int64_t>& agent,
                                      std::size_t max_lag) {
  if (agent.size() != sign.size() || agent.empty()) {
    throw std::invalid_argument("decompose_by_agent: labels missing");
  }
  bool any_label = false;
  for (auto a : agent) {
    if (a >= 0) {
      any_label = true;
      break;
    }
  }
  if (!any_label) {
    throw std::invalid_argument("decompose_by_agent: input is unlabeled");
  }

  auto sums = kernels::agent_cond_products_omp(sign, agent, max_lag);
  AgentDecomposition out;
  for (std::size_t l = 1; l <= max_lag; ++l) {
    double idx = static_cast<double>(l);
    double ns = static_cast<double>(sums.same_count[l - 1]);
    double nd = static_cast<double>(sums.diff_count[l - 1]);
    out.same.lag.push_back(idx);
    out.diff.lag.push_back(idx);
    out.all.lag.push_back(idx);
    out.same.value.push_back(ns > 0 ? sums.same_sum[l - 1] / ns : 0.0);
    out.same.se.push_back(ns > 0 ? 1.0 / std::sqrt(ns) : 0.0);
    out.diff.value.push_back(nd > 0 ? sums.diff_sum[l - 1] / nd : 0.0);
    out.diff.se.push_back(nd > 0 ? 1.0 / std::sqrt(nd) : 0.0);
    double na = ns + nd;
    double sa = sums.same_sum[l - 1] + sums.diff_sum[l - 1];
    out.all.value.push_back(na > 0 ? sa / na : 0.0);
    out.all.se.push_back(na > 0 ? 1.0 / std::sqrt(na) : 0.0);
  }
  return out;
}

TailFit tail_index(const std::vector<double>& sample, double top_fraction) {
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    throw std::invalid_argument("tail_index: top_fraction must be in (0, 1]");
  }
  for (double v : sample) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("tail_index: sample must be positive");
    }
  }
  double k = static_cast<double>(sample.size()) * top_fraction;
  if (k < 50.0) {
    throw std::invalid_argument("tail_index: fewer than 50 tail points");
  }
  return hill_tail(sample, top_fraction);
}

}  // namespace mlab
