#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlab/book/book.hpp"
#include "mlab/book/types.hpp"
#include "mlab/core/rng.hpp"

namespace mlab {

// Zero-intelligence double auction: unit market orders arrive at rate mu per
// side, unit limit orders at rate rho per tick per side, uniformly within
// `band` ticks of the opposite best, and each resting order cancels at rate
// nu. The stationary spread scales as (mu / rho) * F(nu / mu).
struct ZiParams {
  std::size_t n_events = 100000;
  double mu = 1.0;
  double rho = 0.05;
  double nu = 0.01;
  std::int64_t band = 500;
  std::int64_t p0 = 100000;         // initial mid, ticks
  std::int64_t init_half_spread = 2;
  std::size_t burn_in = 20000;      // events skipped by the summary stats
};

struct ZiResult {
  EventStream events;               // includes the seeding limit orders
  OrderBook book;                   // final state
  std::vector<double> spread_after; // spread after each event (NaN if one-sided)
  std::vector<double> dwell;        // exponential holding time of that state
  std::size_t n_seed_events = 0;
  double mean_spread = 0.0;         // time-weighted, after burn-in
  double mean_spread_se = 0.0;
  std::size_t n_market_rejected = 0;
};

ZiResult gen_zero_intelligence(const ZiParams& params, Rng& rng);

}  // namespace mlab
