#include "mlab/spread/gm.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlab {

void GmState::validate() const {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("GmState: q must be in [0, 1]");
  if (!(delta_plus >= 0.0 && delta_plus <= 1.0))
    throw std::invalid_argument("GmState: delta_plus must be in [0, 1]");
  if (!(p_hi > p_lo))
    throw std::invalid_argument("GmState: p_hi must exceed p_lo");
}

double gm_spread(const GmState& s) {
  s.validate();
  return 4.0 * s.q * s.delta_plus * (1.0 - s.delta_plus) * (s.p_hi - s.p_lo);
}

GmStep gm_step(const GmState& s, int sign) {
  s.validate();
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("gm_step: sign must be +-1");

  GmState next = s;
  // Mixture likelihood of the observed sign under each outcome.
  double like_hi = sign > 0 ? 0.5 * (1.0 + s.q) : 0.5 * (1.0 - s.q);
  double like_lo = sign > 0 ? 0.5 * (1.0 - s.q) : 0.5 * (1.0 + s.q);
  double evidence =
      s.delta_plus * like_hi + (1.0 - s.delta_plus) * like_lo;
  if (evidence > 0.0) {
    next.delta_plus =
        std::clamp(s.delta_plus * like_hi / evidence, 0.0, 1.0);
  } else {
    // Only reachable with q = 1 and a belief fully on the side the trade
    // contradicts: jump to the boundary the trade points at.
    next.delta_plus = sign > 0 ? 1.0 : 0.0;
  }
  next.n = s.n + 1;
  return {next, gm_spread(next)};
}

GmPath gm_simulate(const GmState& start, int true_outcome,
                   std::size_t n_trades, Rng& rng) {
  start.validate();
  if (true_outcome != 1 && true_outcome != -1)
    throw std::invalid_argument("gm_simulate: true_outcome must be +-1");

  GmPath path;
  path.spread.reserve(n_trades);
  path.delta_plus.reserve(n_trades);
  GmState state = start;
  for (std::size_t i = 0; i < n_trades; ++i) {
    int sign = rng.bernoulli(state.q) ? true_outcome : rng.sign();
    GmStep step = gm_step(state, sign);
    state = step.state;
    path.spread.push_back(step.spread);
    path.delta_plus.push_back(state.delta_plus);
  }
  path.final_state = state;
  return path;
}

}  // namespace mlab
