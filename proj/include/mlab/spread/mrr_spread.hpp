#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"
#include "mlab/core/series.hpp"

namespace mlab {

// Quoted-spread variant of the surprise-impact model with Markov signs
// (persistence rho) and trade impact theta on the efficient price. The
// dealer quotes so that a filled order carries no ex-post regret plus a
// rent phi per share:
//
//   ask_n = p_n + theta (1 - rho eps_{n-1}) + phi
//   bid_n = p_n - theta (1 + rho eps_{n-1}) - phi
//
// so the spread is constant, S = 2 (theta + phi), and the quoted midpoint
// sits at p_n - theta rho eps_{n-1}. Lagged impact of one trade on the
// quoted midpoint is r(l) = theta (1 - rho^l), which amplifies from r(1)
// to the plateau by lambda = 1 / (1 - rho).
struct MrrSpreadModel {
  double rho = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double spread = 0.0;  // 2 (theta + phi)
  double lambda = 1.0;  // 1 / (1 - rho)

  // Midpoint response l trades after a unit buy: theta (1 - rho^l).
  double r(std::size_t ell) const;
  std::vector<double> r_grid(std::size_t max_lag) const;  // r(1..max_lag)

  // Quote offsets from the current efficient price, given the last sign.
  double ask_offset(int prev_sign) const;
  double bid_offset(int prev_sign) const;
  double mid_offset(int prev_sign) const;

  // Long-run cost of a filled infinitesimal buy limit order: collect the
  // half-spread now, pay the amplified impact of the signs that filled it.
  // Equals -S/2 + lambda r(1) = -phi: the dealer's rent, exactly.
  double limit_order_cost() const;
};

// Requires |rho| < 1, theta >= 0, and theta + phi >= 0 (spread can't be
// negative).
MrrSpreadModel mrr_spread_model(double rho, double theta, double phi);

struct MrrSimulation {
  // Quoted midpoints (size n+1), signs, constant spread column.
  TradeSeries series;
  // Efficient price p_0..p_n; its increments are unpredictable by
  // construction (news plus the sign surprise), unlike quoted-midpoint
  // returns, which inherit an exact lag-one autocovariance
  // theta^2 (1-rho)^2 rho from the dealer's lagged-sign correction.
  std::vector<double> efficient;
};

// Simulate n trades: Markov signs, Gaussian news with variance sigma_sq.
MrrSimulation mrr_spread_simulate(const MrrSpreadModel& m, double sigma_sq,
                                  std::size_t n, Rng& rng);

}  // namespace mlab
