#include "mlab/shape/glosten_sandas.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "mlab/core/stats.hpp"

namespace mlab {

GlostenSandasBook glosten_sandas_book(double alpha, double g_min, double beta,
                                      std::vector<double> distance) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument(
        "glosten_sandas_book: alpha and beta must be > 0");
  }
  if (g_min < 0.0) {
    throw std::invalid_argument("glosten_sandas_book: g_min must be >= 0");
  }
  GlostenSandasBook out;
  out.slope = alpha;
  // beta = inf is allowed: point forecasts, no exponential tail.
  out.intercept = -alpha * (g_min + (std::isinf(beta) ? 0.0 : 1.0 / beta));
  out.depth.reserve(distance.size());
  for (double d : distance) out.depth.push_back(out.slope * d + out.intercept);
  out.distance = std::move(distance);
  return out;
}

double gs_implied_impact(double alpha, double volume) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("gs_implied_impact: alpha must be > 0");
  }
  return volume / alpha;
}

GsFit glosten_sandas_fit(const std::vector<double>& distance,
                         const std::vector<double>& cum_depth) {
  LinearFit line = ols(distance, cum_depth);
  GsFit out;
  out.slope = line.slope;
  out.intercept = line.intercept;
  out.rejected = line.intercept > 0.0;
  return out;
}

}  // namespace mlab
