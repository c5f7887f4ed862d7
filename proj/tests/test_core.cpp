#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <vector>

#include "mlab/core/config.hpp"
#include "mlab/core/csv.hpp"
#include "mlab/core/fft.hpp"
#include "mlab/core/quadrature.hpp"
#include "mlab/core/rng.hpp"
#include "mlab/core/series.hpp"
#include "mlab/core/specfun.hpp"
#include "mlab/core/stats.hpp"

using namespace mlab;

TEST_CASE("rng: deterministic per (seed, stream), distinct across streams") {
  Rng a(42, 0), b(42, 0), c(42, 1), d(7, 0);
  bool same = true, cross_stream = false, cross_seed = false;
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t xa = a.next_u64();
    same = same && (xa == b.next_u64());
    cross_stream = cross_stream || (xa != c.next_u64());
    cross_seed = cross_seed || (xa != d.next_u64());
  }
  CHECK(same);
  CHECK(cross_stream);
  CHECK(cross_seed);

  Rng root(42, 0);
  Rng s1 = root.split(1);
  Rng ref(42, 1);
  CHECK(s1.next_u64() == ref.next_u64());
}

TEST_CASE("rng: uniform moments and support") {
  Rng rng(1);
  const int n = 200000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    s += u;
    s2 += u * u;
  }
  double m = s / n;
  double var = s2 / n - m * m;
  CHECK(m == doctest::Approx(0.5).epsilon(0.01));
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("rng: uniform_int is in range and roughly uniform") {
  Rng rng(2);
  std::vector<int> counts(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++counts[rng.uniform_int(7)];
  for (int k = 0; k < 7; ++k) {
    CHECK(counts[k] > 9000);
    CHECK(counts[k] < 11000);
  }
}

TEST_CASE("rng: normal moments") {
  Rng rng(3);
  const int n = 200000;
  std::vector<double> x(n);
  for (auto& v : x) v = rng.normal();
  CHECK(mean(x) == doctest::Approx(0.0).epsilon(0.02));
  CHECK(sd(x) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(kurtosis(x) == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("rng: exponential, pareto, gamma, student-t distributions") {
  Rng rng(4);
  const int n = 200000;

  double se = 0;
  for (int i = 0; i < n; ++i) se += rng.exponential(2.0);
  CHECK(se / n == doctest::Approx(0.5).epsilon(0.02));

  // Pareto: P(X > c x_min) = c^{-alpha}.
  int above = 0;
  double min_seen = 1e300;
  for (int i = 0; i < n; ++i) {
    double v = rng.pareto(1.5, 2.0);
    min_seen = std::min(min_seen, v);
    if (v > 4.0) ++above;
  }
  CHECK(min_seen >= 2.0);
  CHECK(static_cast<double>(above) / n ==
        doctest::Approx(std::pow(2.0, -1.5)).epsilon(0.03));

  std::vector<double> g(n);
  for (auto& v : g) v = rng.gamma_rv(0.7);
  CHECK(mean(g) == doctest::Approx(0.7).epsilon(0.02));
  CHECK(variance(g) == doctest::Approx(0.7).epsilon(0.03));

  // Student-t with dof=5: variance dof/(dof-2).
  std::vector<double> t(n);
  for (auto& v : t) v = rng.student_t(5.0);
  CHECK(variance(t) == doctest::Approx(5.0 / 3.0).epsilon(0.1));
  CHECK(std::isfinite(rng.student_t(std::numeric_limits<double>::infinity())));
}

TEST_CASE("stats: exact small-sample values") {
  std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
  CHECK(mean(x) == doctest::Approx(2.5));
  CHECK(variance(x) == doctest::Approx(5.0 / 3.0));
  CHECK(quantile(x, 0.0) == doctest::Approx(1.0));
  CHECK(quantile(x, 1.0) == doctest::Approx(4.0));
  CHECK(quantile(x, 0.5) == doctest::Approx(2.5));
  // R type-7 at p=0.25 on {1,2,3,4}: h = 0.75 -> 1.75.
  CHECK(quantile(x, 0.25) == doctest::Approx(1.75));
}

TEST_CASE("stats: ols recovers an exact line") {
  std::vector<double> x = {0, 1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 - 2.0 * v);
  LinearFit f = ols(x, y);
  CHECK(f.slope == doctest::Approx(-2.0));
  CHECK(f.intercept == doctest::Approx(3.0));
  CHECK(f.r2 == doctest::Approx(1.0));
  CHECK(f.slope_se == doctest::Approx(0.0).epsilon(1e-9));

  std::vector<double> y2;
  for (double v : x) y2.push_back(1.7 * v);
  LinearFit f2 = ols_through_origin(x, y2);
  CHECK(f2.slope == doctest::Approx(1.7));
}

TEST_CASE("stats: batch-mean SE matches iid SE on iid data") {
  Rng rng(5);
  std::vector<double> x(100000);
  for (auto& v : x) v = rng.normal();
  double se_classic = standard_error(x);
  double se_batch = batch_mean_se(x);
  CHECK(se_batch == doctest::Approx(se_classic).epsilon(0.25));
}

TEST_CASE("stats: Hill estimator recovers a Pareto exponent") {
  Rng rng(6);
  std::vector<double> x(200000);
  for (auto& v : x) v = rng.pareto(1.5, 1.0);
  TailFit f = hill_tail(x, 0.01);
  CHECK(f.alpha == doctest::Approx(1.5).epsilon(0.08));
  CHECK(f.ci_lo < 1.5);
  CHECK(f.ci_hi > 1.5);
  // Pure Pareto sample: full-sample Hill is the MLE of alpha.
  TailFit mle = hill_tail(x, 1.0);
  CHECK(mle.alpha == doctest::Approx(1.5).epsilon(0.02));
}

TEST_CASE("stats: equal-count bins balance counts") {
  Rng rng(7);
  std::vector<double> x(1000);
  for (auto& v : x) v = rng.uniform();
  auto idx = equal_count_bins(x, 8);
  std::vector<int> counts(8, 0);
  for (auto b : idx) ++counts[b];
  for (int c : counts) CHECK(c == 125);
}

TEST_CASE("specfun: signed log-gamma against known values") {
  // Gamma(-0.5) = -2 sqrt(pi).
  SignedLog g = lgamma_signed(-0.5);
  CHECK(g.sign == -1);
  CHECK(g.value() == doctest::Approx(-2.0 * std::sqrt(M_PI)));
  // Gamma(-1.5) = 4 sqrt(pi) / 3.
  SignedLog g2 = lgamma_signed(-1.5);
  CHECK(g2.sign == +1);
  CHECK(g2.value() == doctest::Approx(4.0 * std::sqrt(M_PI) / 3.0));
  CHECK(lgamma_signed(4.0).value() == doctest::Approx(6.0));
  CHECK_THROWS(lgamma_signed(-2.0));
  CHECK(lbinom(5, 2) == doctest::Approx(std::log(10.0)));
}

TEST_CASE("quadrature: finite, semi-infinite, oscillatory") {
  CHECK(integrate([](double x) { return x * x; }, 0, 1) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  QuadResult e = integrate_to_inf([](double x) { return std::exp(-x); }, 0.0);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-8));
  QuadResult r = integrate_to_inf(
      [](double x) { return x * std::exp(-0.5 * x * x); }, 0.0);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  QuadResult o = integrate_to_inf(
      [](double x) { return std::exp(-x) * std::sin(x); }, 0.0);
  CHECK(o.value == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("fft: convolution and lagged sums match direct evaluation") {
  Rng rng(8);
  std::vector<double> a(37), b(23);
  for (auto& v : a) v = rng.normal();
  for (auto& v : b) v = rng.normal();

  auto conv = fft_convolve(a, b);
  REQUIRE(conv.size() == a.size() + b.size() - 1);
  for (std::size_t k = 0; k < conv.size(); ++k) {
    double direct = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k >= i && k - i < b.size()) direct += a[i] * b[k - i];
    }
    CHECK(conv[k] == doctest::Approx(direct).epsilon(1e-10));
  }

  std::vector<double> x(64);
  for (auto& v : x) v = rng.normal();
  auto sums = fft_autocorr_sums(x, 10);
  for (std::size_t l = 0; l <= 10; ++l) {
    double direct = 0;
    for (std::size_t n = 0; n + l < x.size(); ++n) direct += x[n] * x[n + l];
    CHECK(sums[l] == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("csv: write then read round-trips values exactly") {
  auto path = std::filesystem::temp_directory_path() / "mlab_test_core.csv";
  {
    CsvWriter w(path.string(), {"lag", "value"});
    w.begin_row();
    w.cell(std::int64_t{1});
    w.cell(0.1 + 0.2);  // not exactly representable; must round-trip
    w.end_row();
    w.row({2.0, 1e-17});
  }
  CsvTable t = read_csv(path.string());
  REQUIRE(t.header.size() == 2);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.col_index("value") == 1);
  CHECK(std::stod(t.rows[0][1]) == 0.1 + 0.2);
  CHECK(std::stod(t.rows[1][1]) == 1e-17);
  std::filesystem::remove(path);
}

TEST_CASE("config: sections, types, sweep expansion, stable hash") {
  Config c = Config::from_string(
      "top = 1\n"
      "sweep = flow.lmf.seeds, flow.lmf.modes\n"
      "[flow.lmf]\n"
      "alpha = 1.5   # tail\n"
      "n_orders = 10\n"
      "flag = true\n"
      "seeds = 1, 2, 3\n"
      "modes = a b\n");
  CHECK(c.get_int("top") == 1);
  CHECK(c.get_double("flow.lmf.alpha") == doctest::Approx(1.5));
  CHECK(c.get_bool("flow.lmf.flag", false));
  CHECK(c.get_str("missing", "dflt") == "dflt");
  CHECK_THROWS(c.get_str("missing"));
  CHECK(c.get_double_list("flow.lmf.seeds").size() == 3);

  auto cells = c.expand_sweep();
  REQUIRE(cells.size() == 6);
  for (const auto& cell : cells) {
    CHECK(cell.get_list("flow.lmf.seeds").size() == 1);
  }

  Config c1 = Config::from_string("a = 1\nb = 2\n");
  Config c2 = Config::from_string("b = 2\na = 1\n");
  Config c3 = Config::from_string("a = 1\nb = 3\n");
  CHECK(c1.hash() == c2.hash());
  CHECK(c1.hash() != c3.hash());
  CHECK(c1.hash_hex().size() == 16);
}

TEST_CASE("series: validation and returns") {
  TradeSeries t;
  t.sign = {1, -1, 1};
  t.mid = {100.0, 100.5, 100.0, 100.5};
  CHECK_NOTHROW(t.validate());
  CHECK(t.ret(0, 2) == doctest::Approx(-0.0));
  CHECK(t.ret(1, 2) == doctest::Approx(0.0));
  CHECK(t.vol(1) == 1.0);
  t.mid.pop_back();
  CHECK_THROWS(t.validate());
}
