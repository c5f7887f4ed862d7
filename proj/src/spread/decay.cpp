#include "mlab/spread/decay.hpp"

#include <cmath>
#include <stdexcept>

#include "mlab/core/stats.hpp"

namespace mlab {

SpreadDecay spread_decay(const std::vector<double>& spread, double delta,
                         const std::vector<std::size_t>& taus) {
  if (taus.empty())
    throw std::invalid_argument("spread_decay: empty tau grid");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (taus[i] == 0 || (i > 0 && taus[i] <= taus[i - 1]))
      throw std::invalid_argument(
          "spread_decay: taus must be positive and increasing");
  }
  const std::size_t n = spread.size();
  if (n < 3) throw std::invalid_argument("spread_decay: series too short");

  const double tol = 1e-9 * std::max(1.0, std::abs(delta));
  std::vector<std::size_t> events;
  for (std::size_t t = 1; t + 1 < n; ++t) {
    if (std::abs((spread[t] - spread[t - 1]) - delta) <= tol)
      events.push_back(t);
  }
  if (events.size() < 30) {
    throw std::invalid_argument(
        "spread_decay: fewer than 30 conditioning events");
  }

  double mean_s = mean(spread);

  SpreadDecay out;
  out.n_events = events.size();
  for (std::size_t tau : taus) {
    std::vector<double> vals;
    vals.reserve(events.size());
    for (std::size_t t : events) {
      if (t + tau < n) vals.push_back(spread[t + tau]);
    }
    if (vals.empty()) continue;
    out.curve.lag.push_back(static_cast<double>(tau));
    out.curve.value.push_back(mean(vals) - mean_s);
    out.curve.se.push_back(vals.size() > 1 ? standard_error(vals) : 0.0);
  }
  if (!out.curve.lag.empty()) {
    out.fit = loglog_fit_abs(out.curve, out.curve.lag.front(),
                             out.curve.lag.back());
  }
  return out;
}

}  // namespace mlab
