#pragma once

#include <cmath>
#include <vector>

namespace mlab {

// Parameters of the stationary mean-book theory: limit orders arrive at
// distance u from the mid with density rho(u), survive cancellation at rate
// `cancel`, and are absorbed whenever the diffusing mid (variance
// `diffusion` per unit time) crosses their price. The decay scale
// alpha_bs() = sqrt(2 cancel / diffusion) is the inverse of the typical
// price excursion during an order's lifetime.
struct BookShapeParams {
  enum class Flow { kPowerLaw, kExponential };

  Flow flow = Flow::kPowerLaw;
  double mu_lp = 0.6;      // placement tail exponent, rho(u) ~ u^(-1-mu_lp)
  double beta_e = 0.5;     // placement decay rate, rho(u) = exp(-beta_e u)
  double diffusion = 1.0;  // mid-price variance per unit time
  double cancel = 0.005;   // cancellation rate per resting order

  double alpha_bs() const { return std::sqrt(2.0 * cancel / diffusion); }
  void validate() const;
};

// Stationary spread of the unit-volume Poisson double auction with market
// order rate mu per side, limit order density rho0 per tick per side and
// cancellation rate nu:
//
//   E[S] = (mu / rho0) * (0.28 + 1.86 (nu / mu)^(3/4)).
//
// Increasing in nu; at nu = 0 this reduces to E[S] = 0.28 mu / rho0.
double zi_spread_eos(double mu, double rho0, double nu);

// Stationary mean book profile at rescaled distance delta = alpha_bs * Delta
// for power-law placement with tail exponent mu in (0, 1):
//
//   Phi(delta) = exp(-delta) int_0^delta u^(-1-mu) sinh(u) du
//              + sinh(delta) int_delta^inf u^(-1-mu) exp(-u) du.
//
// Vanishes as delta^(1-mu) at the mid, peaks once, decays as delta^(-1-mu).
// Values are in master-curve units (the overall scale is arbitrary).
double book_master_curve(double mu, double delta);

// Mean book volume density at each distance in `delta` (same units as
// 1/alpha_bs). Exponential flow uses the closed form
//
//   Phi(Delta) = alpha beta / (alpha - beta) (exp(-beta Delta)
//                                             - exp(-alpha Delta)),
//
// normalized to unit total side volume, with the alpha == beta limit
// alpha^2 Delta exp(-alpha Delta) evaluated stably. Power-law flow returns
// book_master_curve(mu_lp, alpha_bs * Delta).
std::vector<double> mean_book_theory(const BookShapeParams& params,
                                     const std::vector<double>& delta);

}  // namespace mlab
