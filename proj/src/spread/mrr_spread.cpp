#include "mlab/spread/mrr_spread.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mlab/flow/signs.hpp"

namespace mlab {

namespace {
void check_sign(int s, const char* who) {
  if (s != 1 && s != -1)
    throw std::invalid_argument(std::string(who) + ": sign must be +-1");
}
}  // namespace

double MrrSpreadModel::r(std::size_t ell) const {
  return theta * (1.0 - std::pow(rho, static_cast<double>(ell)));
}

std::vector<double> MrrSpreadModel::r_grid(std::size_t max_lag) const {
  std::vector<double> out(max_lag);
  double rho_l = 1.0;
  for (std::size_t l = 0; l < max_lag; ++l) {
    rho_l *= rho;
    out[l] = theta * (1.0 - rho_l);
  }
  return out;
}

double MrrSpreadModel::ask_offset(int prev_sign) const {
  check_sign(prev_sign, "ask_offset");
  return theta * (1.0 - rho * prev_sign) + phi;
}

double MrrSpreadModel::bid_offset(int prev_sign) const {
  check_sign(prev_sign, "bid_offset");
  return -theta * (1.0 + rho * prev_sign) - phi;
}

double MrrSpreadModel::mid_offset(int prev_sign) const {
  check_sign(prev_sign, "mid_offset");
  return -theta * rho * prev_sign;
}

double MrrSpreadModel::limit_order_cost() const {
  return -0.5 * spread + lambda * r(1);
}

MrrSpreadModel mrr_spread_model(double rho, double theta, double phi) {
  if (!(std::abs(rho) < 1.0))
    throw std::invalid_argument("mrr_spread_model: need |rho| < 1");
  if (!(theta >= 0.0))
    throw std::invalid_argument("mrr_spread_model: need theta >= 0");
  if (theta + phi < 0.0)
    throw std::invalid_argument("mrr_spread_model: spread would be negative");
  MrrSpreadModel m;
  m.rho = rho;
  m.theta = theta;
  m.phi = phi;
  m.spread = 2.0 * (theta + phi);
  m.lambda = 1.0 / (1.0 - rho);
  return m;
}

MrrSimulation mrr_spread_simulate(const MrrSpreadModel& m, double sigma_sq,
                                  std::size_t n, Rng& rng) {
  if (n == 0)
    throw std::invalid_argument("mrr_spread_simulate: n must be positive");
  if (sigma_sq < 0.0)
    throw std::invalid_argument("mrr_spread_simulate: sigma_sq negative");

  // One extra sign seeds the dealer's lagged correction before trade 0.
  std::vector<int> s = gen_signs_markov(n + 1, m.rho, rng);
  double news_sd = std::sqrt(sigma_sq);

  MrrSimulation sim;
  sim.efficient.resize(n + 1);
  sim.series.sign.assign(s.begin() + 1, s.end());
  sim.series.mid.resize(n + 1);
  sim.series.spread.assign(n, m.spread);

  double p = 0.0;
  sim.efficient[0] = p;
  sim.series.mid[0] = p + m.mid_offset(s[0]);
  for (std::size_t k = 0; k < n; ++k) {
    int eps = s[k + 1];
    int eps_prev = s[k];
    p += (news_sd > 0.0 ? rng.normal(0.0, news_sd) : 0.0) +
         m.theta * (eps - m.rho * eps_prev);
    sim.efficient[k + 1] = p;
    sim.series.mid[k + 1] = p + m.mid_offset(eps);
  }
  return sim;
}

}  // namespace mlab
