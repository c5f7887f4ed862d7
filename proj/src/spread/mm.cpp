#include "mlab/spread/mm.hpp"

#include <cmath>
#include <stdexcept>

#include "mlab/core/stats.hpp"

namespace mlab {

MmBacktest mm_backtest(const TradeSeries& t, double phi0, double alpha) {
  t.validate();
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("mm_backtest: empty series");
  if (t.spread.empty())
    throw std::invalid_argument("mm_backtest: series has no spread column");
  if (!(phi0 > 0.0))
    throw std::invalid_argument("mm_backtest: phi0 must be positive");
  if (!(alpha >= 0.0))
    throw std::invalid_argument("mm_backtest: alpha must be >= 0");

  double mean_v = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean_v += t.vol(i);
  mean_v /= static_cast<double>(n);
  if (alpha * phi0 * mean_v >= 1.0) {
    throw std::invalid_argument(
        "mm_backtest: alpha phi0 E[v] >= 1, inventory recursion unstable");
  }

  MmBacktest out;
  out.beta_hat = 1.0 - alpha * phi0 * mean_v;
  out.inventory.resize(n);

  const double m_final = t.mid[n];
  std::vector<double> pnl(n);  // per-trade gain marked to the final mid
  double cash = 0.0, v_inv = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double eps = t.sign[i];
    double q = phi0 * (1.0 + alpha * v_inv * eps) * t.vol(i);
    double price = t.mid[i] + eps * 0.5 * t.spread[i];
    cash += eps * q * price;
    v_inv -= eps * q;
    total += std::abs(q);
    out.inventory[i] = v_inv;
    out.max_abs_inventory = std::max(out.max_abs_inventory, std::abs(v_inv));
    pnl[i] = eps * q * (price - m_final);
  }

  out.total_volume = total;
  if (total > 0.0) {
    out.gain_per_volume = (cash + v_inv * m_final) / total;
    // Residual position marked over the run's price change: O(1) while the
    // cash leg grows with the run (translation-invariant, unlike V m_T).
    out.boundary_term = v_inv * (m_final - t.mid[0]) / total;
    out.gain_se =
        batch_mean_se(pnl) * static_cast<double>(n) / total;
  }
  return out;
}

}  // namespace mlab
