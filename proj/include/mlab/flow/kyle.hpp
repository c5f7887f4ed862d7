#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

// Linear price formation with an informed trader relaxing the price towards
// a target: demand phi_t = beta * (p_inf - p_t), price update
// p_{t+1} = p_t + lambda * (phi_t + xi_t) + eta_t.
struct KyleParams {
  std::size_t n_steps = 1000;
  double lambda = 0.2;   // price impact per unit net demand
  double beta = 0.5;     // insider aggressiveness
  double p_inf = 110.0;  // insider's target price
  double p0 = 100.0;
  double xi_sd = 0.0;  // noise-trader demand scale
  double eta_sd = 0.0; // exogenous price noise scale
};

struct KyleResult {
  std::vector<double> price;   // n_steps + 1 values, price[0] = p0
  std::vector<double> demand;  // insider demand phi_t, n_steps values
  // The noise-free map has multiplier 1 - lambda*beta; |multiplier| >= 1
  // (lambda*beta >= 2) oscillates without converging.
  bool unstable = false;
};

KyleResult gen_kyle(const KyleParams& params, Rng& rng);

// Noise-free price path under an exogenous demand schedule (no insider
// feedback): p_{t+1} = p_t + lambda * demand[t]. A schedule whose demands
// sum to zero returns the price exactly to p0.
std::vector<double> kyle_replay_demand(double lambda, double p0,
                                       const std::vector<double>& demand);

}  // namespace mlab
