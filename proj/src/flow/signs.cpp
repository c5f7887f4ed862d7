#include "mlab/flow/signs.hpp"

#include <stdexcept>

namespace mlab {

std::vector<int> gen_signs_iid(std::size_t n, Rng& rng) {
  std::vector<int> s(n);
  for (int& v : s) v = rng.sign();
  return s;
}

std::vector<int> gen_signs_markov(std::size_t n, double rho, Rng& rng) {
  if (!(rho > -1.0) || !(rho < 1.0)) {
    throw std::invalid_argument("gen_signs_markov: rho must lie in (-1, 1)");
  }
  std::vector<int> s(n);
  if (n == 0) return s;
  double stay = 0.5 * (1.0 + rho);
  s[0] = rng.sign();
  for (std::size_t i = 1; i < n; ++i) {
    s[i] = rng.bernoulli(stay) ? s[i - 1] : -s[i - 1];
  }
  return s;
}

std::vector<double> draw_pareto_volumes(std::size_t n, double alpha,
                                        double x_min, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.pareto(alpha, x_min);
  return v;
}

std::vector<double> draw_lognormal_volumes(std::size_t n, double mu,
                                           double sigma, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.lognormal(mu, sigma);
  return v;
}

}  // namespace mlab
