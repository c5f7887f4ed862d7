#pragma once

#include <cstddef>
#include <vector>

namespace mlab {

// Closed-form quantities of the surprise-impact model with Markov signs
// (persistence rho, impact scale theta, news variance sigma_sq).
//
// r_flat and the bare-impact split describe the variant where the midpoint
// itself takes the impact; sigma1_sq / sigma_inf_sq are the one-trade and
// long-horizon per-trade variances of the quoted midpoint in the variant
// where the fundamental price takes the impact and quotes are posted with
// no ex-post regret. Both variants share the same parameters.
struct MrrTheory {
  double r_flat = 0.0;        // response at every lag: theta (1 - rho^2)
  double g_immediate = 0.0;   // bare impact at the trade itself: theta
  double g_later = 0.0;       // bare impact at later lags: theta (1 - rho)
  double sigma1_sq = 0.0;     // sigma_sq + theta^2 (1 - rho)^2
  double sigma_inf_sq = 0.0;  // sigma_sq + theta^2 (1 - rho^2)
                              // (>= sigma1_sq iff rho >= 0)
};

MrrTheory mrr_theory(double rho, double theta, double sigma_sq);

// Grids in the shared lag-1 convention used by predict_response and
// variance_curve: g[j] = G(j+1), c[j] = C(j+1).
std::vector<double> mrr_g_grid(double rho, double theta, std::size_t len);
std::vector<double> mrr_c_grid(double rho, std::size_t len);

}  // namespace mlab
