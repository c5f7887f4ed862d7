#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "mlab/book/replay.hpp"
#include "mlab/core/fft.hpp"
#include "mlab/core/lagged_curve.hpp"
#include "mlab/core/stats.hpp"
#include "mlab/flow/farima.hpp"
#include "mlab/flow/kyle.hpp"
#include "mlab/flow/lmf.hpp"
#include "mlab/flow/mike_farmer.hpp"
#include "mlab/flow/propagator_path.hpp"
#include "mlab/flow/signs.hpp"
#include "mlab/flow/zero_intelligence.hpp"

using namespace mlab;

namespace {

// Sample sign autocorrelation C_l = E[s_n s_{n+l}] for l = 1..max_lag.
LaggedCurve sign_acf(const std::vector<int>& sign, std::size_t max_lag) {
  std::vector<double> x(sign.begin(), sign.end());
  auto sums = fft_autocorr_sums(x, max_lag);
  LaggedCurve c;
  for (std::size_t l = 1; l <= max_lag; ++l) {
    double n_pairs = static_cast<double>(sign.size() - l);
    c.lag.push_back(static_cast<double>(l));
    c.value.push_back(sums[l] / n_pairs);
    c.se.push_back(1.0 / std::sqrt(n_pairs));
  }
  return c;
}

}  // namespace

TEST_CASE("farima_coeffs: golden value, positivity, sum < 1") {
  auto a = farima_coeffs(1, 0.75);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // Independent direct Gamma evaluation for a modest K where tgamma is safe.
  const double H = 0.7;
  const std::size_t K = 6;
  auto coeffs = farima_coeffs(K, H);
  REQUIRE(coeffs.size() == K);
  double sum = 0.0;
  for (std::size_t i = 1; i <= K; ++i) {
    double binom = std::tgamma(K + 1.0) /
                   (std::tgamma(i + 1.0) * std::tgamma(K - i + 1.0));
    double direct = -binom * std::tgamma(i - H + 0.5) *
                    std::tgamma(K - H - i + 1.5) /
                    (std::tgamma(0.5 - H) * std::tgamma(K - H + 1.5));
    CHECK(coeffs[i - 1] == doctest::Approx(direct).epsilon(1e-10));
    CHECK(coeffs[i - 1] > 0.0);
    sum += coeffs[i - 1];
  }
  CHECK(sum < 1.0);

  // Memoryless limit: coefficients vanish as H -> 1/2.
  auto tiny = farima_coeffs(8, 0.5001);
  double tiny_sum = std::accumulate(tiny.begin(), tiny.end(), 0.0);
  CHECK(tiny_sum < 0.005);

  CHECK_THROWS(farima_coeffs(4, 0.5));
  CHECK_THROWS(farima_coeffs(4, 1.0));
}

TEST_CASE("farima_coeffs: k^{-beta-1} tail at large K") {
  const double H = 0.75;
  auto a = farima_coeffs(512, H);
  LaggedCurve c;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    c.lag.push_back(static_cast<double>(k));
    c.value.push_back(a[k - 1]);
    c.se.push_back(0.0);
  }
  PowerLawFit f = loglog_fit(c, 10, 256);
  double beta = H - 0.5;
  CHECK(f.exponent == doctest::Approx(-(beta + 1.0)).epsilon(0.05));
}

TEST_CASE("farima_ma_weights: recurrence start") {
  double H = 0.8, d = H - 0.5;
  auto psi = farima_ma_weights(4, H);
  REQUIRE(psi.size() == 4);
  CHECK(psi[0] == doctest::Approx(1.0));
  CHECK(psi[1] == doctest::Approx(d));
  CHECK(psi[2] == doctest::Approx(d * (1.0 + d) / 2.0));
  CHECK(psi[3] == doctest::Approx(d * (1.0 + d) * (2.0 + d) / 6.0));
}

TEST_CASE("gen_signs: iid and markov autocorrelation structure") {
  Rng rng(21);
  auto iid = gen_signs_iid(100000, rng);
  LaggedCurve ci = sign_acf(iid, 3);
  CHECK(std::abs(ci.value[0]) < 3.0 * ci.se[0]);

  Rng rng2(22);
  auto mk = gen_signs_markov(100000, 0.3, rng2);
  LaggedCurve cm = sign_acf(mk, 3);
  for (std::size_t l = 1; l <= 3; ++l) {
    CHECK(std::abs(cm.value[l - 1] - std::pow(0.3, l)) < 3.0 * cm.se[l - 1]);
  }
  Rng rng3(23);
  CHECK_THROWS(gen_signs_markov(10, 1.0, rng3));
}

TEST_CASE("gen_signs_farima: long-memory decay exponent") {
  Rng rng(24);
  FarimaSeries s = gen_signs_farima(1000000, 0.75, rng);
  REQUIRE(s.sign.size() == 1000000);
  double m = 0;
  for (int v : s.sign) m += v;
  m /= s.sign.size();
  // Long memory: the sample mean converges only as n^{-gamma/2}, so the
  // band is far wider than the iid 1/sqrt(n) scale.
  CHECK(std::abs(m) < 0.1);

  LaggedCurve c = sign_acf(s.sign, 2000);
  PowerLawFit f = loglog_fit(c, 10, 1000);
  CHECK(f.exponent > -0.6);
  CHECK(f.exponent < -0.4);
}

TEST_CASE("gen_lmf: pool invariants and labeling") {
  LmfParams p;
  p.n_events = 20000;
  p.alpha = 1.5;
  p.n_orders = 10;
  Rng rng(25);
  LmfResult r = gen_lmf(p, rng);
  REQUIRE(r.sign.size() == p.n_events);
  CHECK(r.pool_final == 10);
  CHECK(r.orders_created == r.orders_retired + r.pool_final);
  for (double v : r.volume) CHECK(v == 1.0);

  // Signs are constant within one hidden order.
  LmfParams p1 = p;
  p1.n_orders = 1;
  Rng rng2(26);
  LmfResult r1 = gen_lmf(p1, rng2);
  std::size_t same_pairs = 0, same_sign_given_same = 0;
  for (std::size_t i = 1; i < r1.sign.size(); ++i) {
    if (r1.order_id[i] == r1.order_id[i - 1]) {
      ++same_pairs;
      if (r1.sign[i] == r1.sign[i - 1]) ++same_sign_given_same;
    }
  }
  CHECK(same_pairs == same_sign_given_same);

  // K=1: lag-1 autocorrelation equals the same-order fraction.
  double p_same =
      static_cast<double>(same_pairs) / static_cast<double>(r1.sign.size() - 1);
  LaggedCurve c1 = sign_acf(r1.sign, 1);
  CHECK(std::abs(c1.value[0] - p_same) < 3.0 * c1.se[0]);

  // Agent pooling maps order ids onto a small label set.
  LmfParams pa = p;
  pa.n_agents = 5;
  Rng rng3(27);
  LmfResult ra = gen_lmf(pa, rng3);
  for (auto g : ra.agent) {
    CHECK(g >= 0);
    CHECK(g < 5);
  }

  LmfParams bad = p;
  bad.alpha = 1.0;
  Rng rng4(28);
  CHECK_THROWS(gen_lmf(bad, rng4));
}

TEST_CASE("gen_lmf: sign autocorrelation exponent near alpha - 1") {
  LmfParams p;
  p.n_events = 1000000;
  p.alpha = 1.5;
  p.n_orders = 10;
  Rng rng(29);
  LmfResult r = gen_lmf(p, rng);
  LaggedCurve c = sign_acf(r.sign, 2000);
  PowerLawFit f = loglog_fit(c, 10, 1000);
  // Single seed: generous band. The acceptance run averages ten seeds.
  CHECK(f.exponent > -0.68);
  CHECK(f.exponent < -0.32);

  // Generalized birth-death pool with lambda_c = 1 matches the fixed pool.
  LmfParams pg = p;
  pg.generalized = true;
  pg.lambda_c = 1.0;
  Rng rng2(30);
  LmfResult rg = gen_lmf(pg, rng2);
  LaggedCurve cg = sign_acf(rg.sign, 2000);
  PowerLawFit fg = loglog_fit(cg, 10, 1000);
  CHECK(std::abs(fg.exponent - f.exponent) < 0.2);
}

TEST_CASE("gen_zero_intelligence: books never cross, EOS ballpark") {
  ZiParams p;
  p.n_events = 100000;
  p.mu = 1.0;
  p.rho = 0.025;  // mu/rho = 40 ticks
  p.nu = 0.05;
  p.band = 500;
  Rng rng(31);
  ZiResult r = gen_zero_intelligence(p, rng);

  ReplayResult rep = replay(OrderBook{}, r.events);
  for (const auto& row : rep.rows) {
    if (!std::isnan(row.spread)) CHECK(row.spread > 0);
  }
  CHECK(rep.book == r.book);

  double u = p.nu / p.mu;
  double eos = (p.mu / p.rho) * (0.28 + 1.86 * std::pow(u, 0.75));
  CHECK(r.mean_spread == doctest::Approx(eos).epsilon(0.25));
  CHECK(r.mean_spread_se < 0.2 * r.mean_spread);

  ZiParams bad = p;
  bad.band = 1;
  Rng rng2(32);
  CHECK_THROWS(gen_zero_intelligence(bad, rng2));
}

TEST_CASE("gen_mike_farmer: crossing when the spread is tight, fat tails") {
  MikeFarmerParams p;
  p.n_events = 60000;
  p.hurst = 0.75;
  p.t_dof = 1.3;
  p.placement_scale = 10.0;
  Rng rng(33);
  MikeFarmerResult r = gen_mike_farmer(p, rng);
  CHECK(r.n_crossing > 100);
  CHECK(r.n_cancels > 100);

  // Walk the stream again, conditioning each placement on the pre-event
  // spread: immediate executions should come from tighter-spread states.
  OrderBook b;
  double s_cross = 0, s_rest = 0;
  std::size_t n_cross = 0, n_rest = 0;
  for (const auto& e : r.events) {
    auto spr = b.spread();
    ApplyResult res = b.apply(e);
    if (e.kind != EventKind::Limit || !spr) continue;
    if (res.executed_volume > 0) {
      s_cross += static_cast<double>(*spr);
      ++n_cross;
    } else {
      s_rest += static_cast<double>(*spr);
      ++n_rest;
    }
  }
  REQUIRE(n_cross > 100);
  REQUIRE(n_rest > 100);
  CHECK(s_cross / n_cross < s_rest / n_rest);

  // Midprice returns are heavy-tailed at desk scale.
  TradeSeries t = trades_from_replay(OrderBook{}, r.events);
  REQUIRE(t.size() > 500);
  std::vector<double> rets;
  for (std::size_t i = 0; i + 1 < t.mid.size(); ++i) {
    rets.push_back(t.mid[i + 1] - t.mid[i]);
  }
  CHECK(kurtosis(rets) > 5.0);

  MikeFarmerParams gauss = p;
  gauss.n_events = 2000;
  gauss.t_dof = std::numeric_limits<double>::infinity();
  Rng rng2(34);
  MikeFarmerResult rg = gen_mike_farmer(gauss, rng2);
  CHECK(rg.events.size() >= gauss.n_events);
  CHECK(rg.book.stats().n_orders > 0);

  MikeFarmerParams bad = p;
  bad.t_dof = 0.9;
  Rng rng3(35);
  CHECK_THROWS(gen_mike_farmer(bad, rng3));
}

TEST_CASE("gen_kyle: relaxation, instability flag, round trip") {
  KyleParams p;
  p.n_steps = 50;
  p.lambda = 0.5;
  p.beta = 0.8;
  p.p0 = 100.0;
  p.p_inf = 110.0;
  Rng rng(36);
  KyleResult r = gen_kyle(p, rng);
  CHECK(!r.unstable);
  double mult = 1.0 - p.lambda * p.beta;
  for (std::size_t t = 0; t <= 5; ++t) {
    double expect = p.p_inf + std::pow(mult, t) * (p.p0 - p.p_inf);
    CHECK(r.price[t] == doctest::Approx(expect).epsilon(1e-12));
  }

  KyleParams up = p;
  up.lambda = 4.0;
  up.beta = 0.6;
  Rng rng2(37);
  CHECK(gen_kyle(up, rng2).unstable);

  // beta = 0: a pure noise-driven walk.
  KyleParams noise = p;
  noise.beta = 0.0;
  noise.eta_sd = 1.0;
  noise.n_steps = 20000;
  Rng rng3(38);
  KyleResult rn = gen_kyle(noise, rng3);
  std::vector<double> inc;
  for (std::size_t t = 0; t + 1 < rn.price.size(); ++t) {
    inc.push_back(rn.price[t + 1] - rn.price[t]);
  }
  CHECK(mean(inc) == doctest::Approx(0.0).epsilon(0.05));
  CHECK(sd(inc) == doctest::Approx(1.0).epsilon(0.05));

  // A buy program fully unwound at the same impact returns to the start.
  std::vector<double> demand(10, 3.0);
  demand.insert(demand.end(), 10, -3.0);
  auto path = kyle_replay_demand(0.5, 100.0, demand);
  CHECK(path.back() == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("gen_propagator_path: matches direct superposition") {
  Rng rng(39);
  std::vector<double> g = {1.0, 0.8, 0.65, 0.55, 0.5, 0.47, 0.45, 0.44};
  std::vector<double> s(50);
  for (auto& v : s) v = rng.bernoulli(0.5) ? 1.0 : -1.0;

  Rng dummy(0);
  PropagatorPath path = gen_propagator_path(s, g, 0.0, dummy);
  REQUIRE(path.mid.size() == s.size() + 1);
  auto g_at = [&](std::size_t l) {  // l >= 1, plateau beyond the last point
    return l <= g.size() ? g[l - 1] : g.back();
  };
  for (std::size_t t = 1; t <= s.size(); ++t) {
    double direct = 0;
    for (std::size_t k = 0; k < t; ++k) direct += g_at(t - k) * s[k];
    CHECK(path.mid[t] == doctest::Approx(direct).epsilon(1e-9));
  }

  // Constant kernel: the path is the kernel times the running sign sum.
  std::vector<double> flat = {0.7};
  PropagatorPath pf = gen_propagator_path(s, flat, 0.0, dummy);
  double run = 0;
  for (std::size_t t = 0; t < s.size(); ++t) {
    run += s[t];
    CHECK(pf.mid[t + 1] == doctest::Approx(0.7 * run).epsilon(1e-10));
  }
}

TEST_CASE("sample volumes: pareto tail and lognormal normality") {
  Rng rng(40);
  auto v = draw_pareto_volumes(1000000, 1.5, 1.0, rng);
  TailFit f = hill_tail(v, 0.01);
  CHECK(f.alpha > 1.35);
  CHECK(f.alpha < 1.65);

  Rng rng2(41);
  auto ln = draw_lognormal_volumes(200000, 0.5, 1.2, rng2);
  std::vector<double> logs;
  logs.reserve(ln.size());
  for (double x : ln) logs.push_back(std::log(x));
  CHECK(mean(logs) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(sd(logs) == doctest::Approx(1.2).epsilon(0.02));
  CHECK(kurtosis(logs) == doctest::Approx(3.0).epsilon(0.05));

  // alpha = 3: finite second moment, stable across seeds.
  Rng ra(42), rb(43);
  auto va = draw_pareto_volumes(200000, 3.0, 1.0, ra);
  auto vb = draw_pareto_volumes(200000, 3.0, 1.0, rb);
  double m2a = 0, m2b = 0;
  for (double x : va) m2a += x * x;
  for (double x : vb) m2b += x * x;
  m2a /= va.size();
  m2b /= vb.size();
  CHECK(m2a == doctest::Approx(3.0).epsilon(0.15));  // E[X^2] = alpha/(alpha-2)
  CHECK(m2b == doctest::Approx(m2a).epsilon(0.2));
}
