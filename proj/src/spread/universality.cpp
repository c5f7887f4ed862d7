#include "mlab/spread/universality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/core/stats.hpp"

namespace mlab {

SpreadVolRelation spread_vol_relation(
    const std::vector<TradeSeries>& stocks) {
  if (stocks.size() < 10) {
    throw std::invalid_argument(
        "spread_vol_relation: need at least 10 series");
  }

  const std::size_t m = stocks.size();
  std::vector<double> rbar1_sq(m), sigma1_sq(m), sigma1(m), es(m), ev(m),
      evs(m), evr(m), ev_es(m), ev_rbar(m);
  for (std::size_t s = 0; s < m; ++s) {
    const TradeSeries& t = stocks[s];
    t.validate();
    if (t.spread.empty())
      throw std::invalid_argument(
          "spread_vol_relation: series has no spread column");
    const std::size_t n = t.size();
    if (n < 16)
      throw std::invalid_argument("spread_vol_relation: series too short");

    std::vector<double> dm(n);
    double r1 = 0.0, sum_s = 0.0, sum_v = 0.0, sum_vs = 0.0, sum_vr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dm[i] = t.ret(i, 1);
      double v = t.vol(i);
      r1 += t.sign[i] * dm[i];
      sum_s += t.spread[i];
      sum_v += v;
      sum_vs += v * t.spread[i];
      sum_vr += v * t.sign[i] * dm[i];
    }
    double inv_n = 1.0 / static_cast<double>(n);
    r1 *= inv_n;
    rbar1_sq[s] = r1 * r1;
    sigma1_sq[s] = variance(dm);
    sigma1[s] = std::sqrt(sigma1_sq[s]);
    es[s] = sum_s * inv_n;
    ev[s] = sum_v * inv_n;
    evs[s] = sum_vs * inv_n;
    evr[s] = sum_vr * inv_n;
    ev_es[s] = ev[s] * es[s];
    ev_rbar[s] = ev[s] * r1;
  }

  SpreadVolRelation out;
  out.n_stocks = m;
  // A panel with no cross-sectional variation in the squared response
  // cannot identify a slope and an intercept; summation rounding can
  // leave the regression spread at a few ulp, so test it directly.
  auto [xlo, xhi] = std::minmax_element(rbar1_sq.begin(), rbar1_sq.end());
  if (!(*xhi - *xlo > 1e-9 * std::max(1.0, std::abs(*xhi)))) {
    throw std::invalid_argument(
        "spread_vol_relation: degenerate cross-section");
  }
  LinearFit main = ols(rbar1_sq, sigma1_sq);
  out.a = main.slope;
  out.sigma_sq_hat = main.intercept;
  out.c = ols_through_origin(sigma1, es).slope;
  out.b = ols_through_origin(ev_es, evs).slope;
  out.b_prime = ols_through_origin(ev_rbar, evr).slope;
  if (!std::isfinite(out.a) || !std::isfinite(out.c) ||
      !std::isfinite(out.b) || !std::isfinite(out.b_prime)) {
    throw std::invalid_argument("spread_vol_relation: degenerate regression");
  }
  return out;
}

}  // namespace mlab
