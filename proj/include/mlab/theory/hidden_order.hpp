#pragma once
// Expected price path while a long sequence of same-signed trades is fed to
// the market, against a market maker whose fair-price update subtracts the
// part of each sign predicted from the last k lags.
//
// The order submits n_trades child trades of the given sign; with
// participation pi < 1 the children are spaced 1/pi market trades apart.
// Impact is measured in units where an unpredicted sign moves the price by
// theta.  Entry t counts market trades elapsed after the last child trade.

#include <cstddef>
#include <vector>

namespace mlab {

struct HiddenOrderSpec {
  std::size_t n_trades = 0;
  double participation = 1.0;  // fraction of market trades that are children
  int sign = 1;
  std::size_t k_lags = 0;      // predictor window (closed forms only)
  double theta = 1.0;
  double hurst = 0.75;         // sign-memory index behind the predictor

  void validate() const;
};

// Expected mid displacement t market trades after the order completes, given
// the predictor weights a[0..K-1] (weight on lag 1 first).  t > 0 requires
// participation == 1.
double hidden_order_impact(const HiddenOrderSpec& spec,
                           const std::vector<double>& a, std::size_t t);

// Displacement at t = 0, 1, .., t_max in one pass.
std::vector<double> hidden_order_path(const HiddenOrderSpec& spec,
                                      const std::vector<double>& a,
                                      std::size_t t_max);

// Continuum estimate of the peak displacement for a long-memory predictor
// with tail exponent beta = hurst - 1/2: grows like pi^beta N^(1-beta).
double hidden_order_asymptotic(const HiddenOrderSpec& spec, double beta);

// Exact limit of the displacement long after completion when the weights are
// the optimal length-k_lags forecast of a long-memory sign process with the
// given hurst index.  Positive: a finite-window predictor never fully
// reverts the order.  Requires k_lags >= 1 and hurst in (1/2, 1).
double permanent_impact(const HiddenOrderSpec& spec);

// impact(t) - impact(0): how much of the peak has decayed t trades after
// completion (non-positive for a buy order).
double post_order_decay(const HiddenOrderSpec& spec,
                        const std::vector<double>& a, std::size_t t);

}  // namespace mlab
