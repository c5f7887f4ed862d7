#include "mlab/theory/hidden_order.hpp"

#include <cmath>
#include <stdexcept>

namespace mlab {

void HiddenOrderSpec::validate() const {
  if (n_trades == 0) {
    throw std::invalid_argument("HiddenOrderSpec: n_trades must be positive");
  }
  if (!(participation > 0.0 && participation <= 1.0)) {
    throw std::invalid_argument(
        "HiddenOrderSpec: participation must be in (0, 1]");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("HiddenOrderSpec: sign must be +1 or -1");
  }
  if (!(theta > 0.0)) {
    throw std::invalid_argument("HiddenOrderSpec: theta must be positive");
  }
}

namespace {

// Saturating prefix sums of the predictor weights: A(n) = sum_{j<=n} a_j,
// held at A(K) for n beyond the window.
std::vector<double> prefix(const std::vector<double>& a) {
  std::vector<double> p(a.size() + 1, 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) p[j + 1] = p[j] + a[j];
  return p;
}

double prefix_at(const std::vector<double>& p, std::size_t n) {
  return p[std::min(n, p.size() - 1)];
}

}  // namespace

double hidden_order_impact(const HiddenOrderSpec& spec,
                           const std::vector<double>& a, std::size_t t) {
  spec.validate();
  if (a.empty()) {
    throw std::invalid_argument("hidden_order_impact: empty weight vector");
  }
  if (t > 0 && spec.participation < 1.0) {
    throw std::invalid_argument(
        "hidden_order_impact: decay lags need participation == 1");
  }
  std::vector<double> p = prefix(a);
  double total = 0.0;
  for (std::size_t i = t + 1; i <= t + spec.n_trades; ++i) {
    // Child i executes after ceil(i / participation) - 1 earlier market
    // trades; the predictor has absorbed that much of the run.
    std::size_t seen = static_cast<std::size_t>(std::ceil(
                           static_cast<double>(i) / spec.participation -
                           1e-12)) -
                       1;
    total += 1.0 - prefix_at(p, seen);
  }
  return static_cast<double>(spec.sign) * spec.theta * total;
}

std::vector<double> hidden_order_path(const HiddenOrderSpec& spec,
                                      const std::vector<double>& a,
                                      std::size_t t_max) {
  std::vector<double> out(t_max + 1);
  out[0] = hidden_order_impact(spec, a, 0);
  if (t_max == 0) return out;
  if (spec.participation < 1.0) {
    throw std::invalid_argument(
        "hidden_order_path: decay lags need participation == 1");
  }
  std::vector<double> p = prefix(a);
  double eps_theta = static_cast<double>(spec.sign) * spec.theta;
  for (std::size_t t = 1; t <= t_max; ++t) {
    // Shifting the window drops the term at i = t and gains i = t + N.
    out[t] = out[t - 1] + eps_theta * (prefix_at(p, t - 1) -
                                       prefix_at(p, t + spec.n_trades - 1));
  }
  return out;
}

double hidden_order_asymptotic(const HiddenOrderSpec& spec, double beta) {
  spec.validate();
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument(
        "hidden_order_asymptotic: beta must be in (0, 1)");
  }
  double n = static_cast<double>(spec.n_trades);
  double gain = std::pow(2.0, beta - 1.0) * std::pow(spec.participation, beta) *
                (std::pow(2.0 * n - 1.0, 1.0 - beta) - 1.0) / (1.0 - beta);
  return static_cast<double>(spec.sign) * spec.theta * (1.0 + gain);
}

double permanent_impact(const HiddenOrderSpec& spec) {
  spec.validate();
  if (spec.k_lags == 0) {
    throw std::invalid_argument("permanent_impact: k_lags must be positive");
  }
  if (!(spec.hurst > 0.5 && spec.hurst < 1.0)) {
    throw std::invalid_argument(
        "permanent_impact: hurst must be in (1/2, 1)");
  }
  double d = spec.hurst - 0.5;
  double k = static_cast<double>(spec.k_lags);
  // 1 - sum of the optimal window-K weights telescopes into a ratio of
  // Gamma functions; every argument below is positive.
  double log_frac = std::lgamma(k + 1.0 - 2.0 * d) + std::lgamma(1.0 - d) -
                    std::lgamma(1.0 - 2.0 * d) - std::lgamma(k + 1.0 - d);
  return static_cast<double>(spec.sign) * spec.theta *
         static_cast<double>(spec.n_trades) * std::exp(log_frac);
}

double post_order_decay(const HiddenOrderSpec& spec,
                        const std::vector<double>& a, std::size_t t) {
  return hidden_order_impact(spec, a, t) - hidden_order_impact(spec, a, 0);
}

}  // namespace mlab
