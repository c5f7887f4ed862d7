#pragma once

#include <vector>

#include "mlab/core/series.hpp"

namespace mlab {

// Backtest of a passive dealer who fills a fraction
//
//   phi_i = phi0 (1 + alpha V_i eps_i)
//
// of each incoming market order at the prevailing quote (mid + eps S/2),
// where V_i is the dealer's inventory before the trade. alpha > 0 makes
// the tendered fraction lean against the position, so inventory follows a
// mean-reverting recursion with per-trade coefficient beta_hat =
// 1 - alpha phi0 E[v]. Results are first order in phi0: the dealer's own
// fills are assumed not to move the stream.
struct MmBacktest {
  std::vector<double> inventory;  // V after each trade
  double gain_per_volume = 0.0;   // (cash + V_T m_T) / total_volume
  double gain_se = 0.0;           // batch-mean standard error
  double boundary_term = 0.0;     // V_T (m_T - m_0) / total_volume: the
                                  // residual-position mark, O(1) in run
                                  // length, reported apart
  double beta_hat = 1.0;          // 1 - alpha phi0 E[v]
  double max_abs_inventory = 0.0;
  double total_volume = 0.0;      // sum |q_i| filled
};

// Requires a spread column, phi0 > 0, alpha >= 0, and
// alpha phi0 E[v] < 1 (otherwise the inventory recursion is unstable).
MmBacktest mm_backtest(const TradeSeries& t, double phi0, double alpha);

}  // namespace mlab
