#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

// Belief-ladder dealer model. A fraction q of incoming traders know which
// of two settlement values the asset will take and always trade toward it;
// the rest buy or sell with equal probability. The dealer tracks the
// posterior delta_plus that the high outcome is true and posts regret-free
// quotes around the posterior mean, giving the spread
//
//   S = 4 q delta_plus (1 - delta_plus) (p_hi - p_lo)
//
// (exact to first order in q; exact at delta_plus = 1/2).
struct GmState {
  double q = 0.0;           // informed fraction
  double p_hi = 1.0;        // high settlement value
  double p_lo = 0.0;        // low settlement value
  double delta_plus = 0.5;  // posterior weight on the high outcome
  std::size_t n = 0;        // trades absorbed so far

  void validate() const;
};

// Quoted spread implied by the current belief.
double gm_spread(const GmState& s);

struct GmStep {
  GmState state;
  double spread = 0.0;
};

// Absorb one signed trade (+1 buy, -1 sell): Bayes update of delta_plus
// under the mixture likelihood P(buy | high) = (1 + q) / 2,
// P(buy | low) = (1 - q) / 2, then requote. A zero-probability observation
// (q = 1 with a belief fully on the contradicted side) collapses the belief
// to the boundary the trade points at instead of dividing by zero.
GmStep gm_step(const GmState& s, int sign);

struct GmPath {
  std::vector<double> spread;      // S_n after trade n
  std::vector<double> delta_plus;  // belief after trade n
  GmState final_state;
};

// Run n_trades through the dealer with the true outcome fixed
// (+1 = high, -1 = low): each trade is informed with probability q and
// noise otherwise. The spread declines on average as the dealer learns.
GmPath gm_simulate(const GmState& start, int true_outcome,
                   std::size_t n_trades, Rng& rng);

}  // namespace mlab
