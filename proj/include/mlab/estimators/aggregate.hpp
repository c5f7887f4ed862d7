#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/lagged_curve.hpp"
#include "mlab/core/rng.hpp"
#include "mlab/core/series.hpp"

namespace mlab {

// Impact of the signed volume aggregated over non-overlapping windows of N
// trades: R(Q, N) = E[m_end - m_start | sum eps_i v_i = Q], binned with
// equal counts. The rescaled axes divide Q and R by the inter-quantile
// width Q*_N = Q^{(95)} - Q^{(5)} of the window volume.
struct AggregateImpactCurve {
  std::size_t n_agg = 1;
  double q_star = 0.0;
  std::vector<double> q, r, se;
  std::vector<double> q_rescaled, r_rescaled;
  std::size_t n_windows = 0;
  std::size_t n_bins_dropped = 0;  // one-sided/empty bins removed
};

std::vector<AggregateImpactCurve> aggregate_impact(
    const TradeSeries& t, const std::vector<std::size_t>& n_list,
    std::size_t n_bins);

// Single-transaction impact: log-log fit of E[eps r | v] ~ lambda v^psi plus
// the probability of any midprice move as a function of volume (which, for
// unit-depth-one books, is the opposite-best-queue CDF).
struct SingleImpactFit {
  PowerLawFit shape;  // exponent = psi, prefactor = lambda
  std::vector<double> v_bin, impact, impact_se;
  std::vector<double> p_move;  // P(|r| > 0 | v bin)
};

SingleImpactFit fit_single_impact(const TradeSeries& t,
                                  std::size_t n_bins = 30);

// Aggregation with the temporal structure destroyed: per-trade returns are
// permuted uniformly and re-aggregated over the same fixed-length bins, so
// the per-bin counts and the unconditional return distribution are
// preserved exactly while all correlation is removed.
struct ShuffleResult {
  std::vector<double> real_sum;      // per-bin aggregated return, real order
  std::vector<double> shuffled_sum;  // same bins, permuted returns
  std::size_t bin_len = 0;
};

ShuffleResult surrogate_shuffle(const TradeSeries& t, std::size_t bin_len,
                                Rng& rng);

}  // namespace mlab
