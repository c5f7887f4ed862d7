#include "mlab/theory/mrr.hpp"

#include <cmath>
#include <stdexcept>

namespace mlab {

MrrTheory mrr_theory(double rho, double theta, double sigma_sq) {
  if (!(std::abs(rho) < 1.0)) {
    throw std::invalid_argument("mrr_theory: need |rho| < 1");
  }
  if (!(theta > 0.0)) throw std::invalid_argument("mrr_theory: need theta > 0");
  if (sigma_sq < 0.0) {
    throw std::invalid_argument("mrr_theory: negative noise variance");
  }
  MrrTheory out;
  out.r_flat = theta * (1.0 - rho * rho);
  out.g_immediate = theta;
  out.g_later = theta * (1.0 - rho);
  out.sigma1_sq = sigma_sq + theta * theta * (1.0 - rho) * (1.0 - rho);
  out.sigma_inf_sq = sigma_sq + theta * theta * (1.0 - rho * rho);
  return out;
}

std::vector<double> mrr_g_grid(double rho, double theta, std::size_t len) {
  std::vector<double> g(len, theta * (1.0 - rho));
  if (!g.empty()) g[0] = theta;
  return g;
}

std::vector<double> mrr_c_grid(double rho, std::size_t len) {
  std::vector<double> c(len);
  double p = 1.0;
  for (auto& v : c) {
    p *= rho;
    v = p;
  }
  return c;
}

}  // namespace mlab
