#include "mlab/flow/kyle.hpp"

#include <stdexcept>

namespace mlab {

KyleResult gen_kyle(const KyleParams& params, Rng& rng) {
  if (params.lambda <= 0.0) {
    throw std::invalid_argument("gen_kyle: lambda must be positive");
  }
  if (params.beta < 0.0) {
    throw std::invalid_argument("gen_kyle: beta must be non-negative");
  }
  KyleResult out;
  out.unstable = params.lambda * params.beta >= 2.0;
  out.price.reserve(params.n_steps + 1);
  out.demand.reserve(params.n_steps);
  out.price.push_back(params.p0);
  double p = params.p0;
  for (std::size_t t = 0; t < params.n_steps; ++t) {
    double phi = params.beta * (params.p_inf - p);
    double xi = params.xi_sd > 0.0 ? params.xi_sd * rng.normal() : 0.0;
    double eta = params.eta_sd > 0.0 ? params.eta_sd * rng.normal() : 0.0;
    p += params.lambda * (phi + xi) + eta;
    out.demand.push_back(phi);
    out.price.push_back(p);
  }
  return out;
}

std::vector<double> kyle_replay_demand(double lambda, double p0,
                                       const std::vector<double>& demand) {
  std::vector<double> price;
  price.reserve(demand.size() + 1);
  price.push_back(p0);
  double p = p0;
  for (double phi : demand) {
    p += lambda * phi;
    price.push_back(p);
  }
  return price;
}

}  // namespace mlab
