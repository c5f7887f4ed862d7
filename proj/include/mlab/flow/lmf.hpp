#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

// Hidden-order flow: a pool of metaorders with Pareto-distributed sizes is
// worked one unit per step by uniformly choosing a live order. The sign
// autocorrelation decays as l^{-(alpha - 1)}.
struct LmfParams {
  std::size_t n_events = 100000;
  double alpha = 1.5;        // size tail exponent (1 < alpha < 2 typical)
  std::size_t n_orders = 10; // pool size K (fixed-pool variant)
  bool generalized = false;  // birth-death pool instead of fixed K
  double lambda_c = 0.5;     // replacement probability per completed order
                             // (generalized; 1 reduces to the fixed pool)
  double min_size = 1.0;     // sizes are ceil(Pareto) >= min_size
  std::size_t n_agents = 0;  // map orders onto this many agent codes; 0 = id
};

struct LmfResult {
  std::vector<int> sign;
  std::vector<double> volume;           // unit volume per event
  std::vector<std::int64_t> agent;      // agent code (or hidden-order id)
  std::vector<std::int64_t> order_id;   // hidden-order id per event
  std::size_t orders_created = 0;
  std::size_t orders_retired = 0;
  std::size_t pool_final = 0;
};

LmfResult gen_lmf(const LmfParams& params, Rng& rng);

}  // namespace mlab
