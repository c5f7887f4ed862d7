#pragma once

#include <cstddef>
#include <vector>

namespace mlab {

// Power-law single-trade kernel and sign-correlation pair:
//   G(l) = gamma0 / (ell0^2 + l^2)^{beta/2},  C(l) = c0 l^{-gamma},
// plus per-step noise variance sigma_sq and an impact scale theta.
struct PropagatorModel {
  double gamma0 = 1.0;
  double beta = 0.25;
  double ell0 = 0.0;
  double c0 = 0.1;
  double gamma = 0.5;
  double sigma_sq = 0.0;
  double theta = 1.0;

  void validate() const;
  double g(double ell) const;
  double c(double ell) const;
  std::vector<double> g_grid(std::size_t len) const;  // g[j] = G(j+1)
  std::vector<double> c_grid(std::size_t len) const;  // c[j] = C(j+1)
};

// Lagged price variance V_l = E[(m_{n+l} - m_n)^2] of the superposition
// price on shared (g, c) grids, with the same plateau/zero conventions as
// predict_response, plus the correlation-induced part Delta(l):
//
//   V_l = sum_{i<=l} G(i)^2 + sum_{j>=1} [G(l+j)-G(j)]^2
//         + 2 Delta(l) + sigma_sq l.
//
// Exact evaluation for every l = 1..max_lag; computed via the return
// autocovariance in O((J+L) log(J+L)). Above 10^4 lags a cost note is set
// (the literal triple sums this reproduces are O(L^2)).
struct VarianceCurve {
  std::vector<double> v;
  std::vector<double> delta;
  bool cost_warning = false;
};

VarianceCurve variance_curve(const std::vector<double>& g,
                             const std::vector<double>& c, double sigma_sq,
                             std::size_t max_lag);

// Amplitude integral I(gamma, beta) of the correlation term, so that
// Delta(l) ~ gamma0^2 c0 I(gamma, beta) l^{2 - 2 beta - gamma}. Computed by
// nested adaptive quadrature with power substitutions at the integrable
// endpoint singularities; absolute tolerance tol.
double variance_amplitude(double gamma, double beta, double tol = 1e-8);

double delta_asymptotic(const PropagatorModel& m, double ell);

// Prefactor of the response asymptote R_l ~ pref * l^{1 - beta - gamma}
// (for beta + gamma < 1). Crosses zero exactly at the critical exponent.
double response_prefactor(double gamma, double beta, double c0,
                          double gamma0);

// Critical kernel exponent: root of the response-prefactor bracket in
// (0, 1 - gamma); equals (1 - gamma) / 2.
double beta_critical(double gamma);

}  // namespace mlab
