#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

std::vector<int> gen_signs_iid(std::size_t n, Rng& rng);

// Two-state Markov chain with persistence (1 + rho) / 2, so the sign
// autocorrelation is rho^l. rho in (-1, 1).
std::vector<int> gen_signs_markov(std::size_t n, double rho, Rng& rng);

std::vector<double> draw_pareto_volumes(std::size_t n, double alpha,
                                        double x_min, Rng& rng);
std::vector<double> draw_lognormal_volumes(std::size_t n, double mu,
                                           double sigma, Rng& rng);

}  // namespace mlab
