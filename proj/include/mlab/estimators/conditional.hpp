#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/series.hpp"
#include "mlab/core/stats.hpp"

namespace mlab {

// Asymmetric-liquidity measurement: the next sign is predicted from the
// previous k_lags signs by least squares, trades are binned on the
// predictor value (equal counts), and the single-trade return is averaged
// per bin conditional on the realized sign.
//
// r_plus is E[r | eps = +1] and r_minus is -E[r | eps = -1], so on an
// efficient market both are positive and the martingale residual
// phi_plus * r_plus - phi_minus * r_minus vanishes bin by bin.
struct ConditionalReturns {
  std::vector<double> ar_coeffs;  // least-squares predictor a_1..a_K

  std::vector<double> bin_center;  // mean predictor value per bin
  std::vector<double> r_plus, r_plus_se;
  std::vector<double> r_minus, r_minus_se;
  std::vector<double> phi_plus;  // P(eps = +1 | bin)
  std::vector<double> martingale, martingale_se;

  LinearFit plus_fit;   // r_plus vs predictor (slope -> -theta on MRR)
  LinearFit minus_fit;  // r_minus vs predictor (slope -> +theta on MRR)
};

ConditionalReturns conditional_returns(const TradeSeries& t,
                                       std::size_t k_lags,
                                       std::size_t n_bins = 20);

}  // namespace mlab
