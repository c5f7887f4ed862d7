#include "mlab/estimators/response.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlab/core/fft.hpp"
#include "mlab/core/stats.hpp"
#include "mlab/kernels/lag_kernels.hpp"

namespace mlab {

namespace {

void check_grids(const std::vector<double>& g, const std::vector<double>& c,
                 std::size_t max_lag) {
  if (g.size() != c.size()) {
    throw std::invalid_argument("response: G and C grids differ in length");
  }
  if (g.empty() || max_lag == 0 || max_lag > g.size()) {
    throw std::invalid_argument("response: bad lag range");
  }
}

// System matrix of the truncated response relation; row l-1 maps
// (G(1)..G(L)) to R_l. Shared by the forward check and the inversion.
Eigen::MatrixXd response_operator(const std::vector<double>& c) {
  const std::size_t L = c.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(L, L);
  for (std::size_t l = 1; l <= L; ++l) {
    a(l - 1, l - 1) += 1.0;
    for (std::size_t j = 1; j < l; ++j) {
      a(l - 1, l - j - 1) += c[j - 1];
    }
    for (std::size_t j = 1; j <= L; ++j) {
      std::size_t k = std::min(l + j, L);  // plateau beyond the grid
      a(l - 1, k - 1) += c[j - 1];
      a(l - 1, j - 1) -= c[j - 1];
    }
  }
  return a;
}

}  // namespace

LaggedCurve response_function(const TradeSeries& t, std::size_t max_lag) {
  t.validate();
  if (max_lag >= t.size()) {
    throw std::invalid_argument("response_function: max_lag >= series length");
  }
  auto stats = kernels::response_stats_omp(t.sign, t.mid, max_lag);
  LaggedCurve out;
  for (std::size_t l = 1; l <= max_lag; ++l) {
    out.lag.push_back(static_cast<double>(l));
    out.value.push_back(stats.mean[l - 1]);
    out.se.push_back(stats.se[l - 1]);
  }
  return out;
}

std::vector<double> predict_response(const std::vector<double>& g,
                                     const std::vector<double>& c,
                                     std::size_t max_lag) {
  check_grids(g, c, max_lag);
  const std::size_t J = g.size();

  // sum_{j<l} C_j G(l-j) is a linear convolution.
  std::vector<double> conv = fft_convolve(c, g);

  // sum_j C_j G(l+j) is a cross-correlation against the plateau-extended G.
  std::vector<double> gext(J + max_lag);
  for (std::size_t m = 0; m < gext.size(); ++m) {
    gext[m] = m < J ? g[m] : g[J - 1];
  }
  std::vector<double> cross = fft_crosscorr_sums(c, gext, max_lag);

  double dot_cg = 0.0;
  for (std::size_t i = 0; i < J; ++i) dot_cg += c[i] * g[i];

  std::vector<double> r(max_lag);
  for (std::size_t l = 1; l <= max_lag; ++l) {
    double term2 = l >= 2 ? conv[l - 2] : 0.0;
    r[l - 1] = g[l - 1] + term2 + (cross[l] - dot_cg);
  }
  return r;
}

std::vector<double> predict_response_direct(const std::vector<double>& g,
                                            const std::vector<double>& c,
                                            std::size_t max_lag) {
  check_grids(g, c, max_lag);
  const std::size_t J = g.size();
  auto g_at = [&](std::size_t k) { return k <= J ? g[k - 1] : g[J - 1]; };
  std::vector<double> r(max_lag);
  for (std::size_t l = 1; l <= max_lag; ++l) {
    double acc = g_at(l);
    for (std::size_t j = 1; j < l; ++j) acc += c[j - 1] * g_at(l - j);
    for (std::size_t j = 1; j <= J; ++j) {
      acc += c[j - 1] * (g_at(l + j) - g_at(j));
    }
    r[l - 1] = acc;
  }
  return r;
}

ExtractedPropagator extract_propagator(const std::vector<double>& r,
                                       const std::vector<double>& c) {
  if (r.size() != c.size()) {
    throw std::invalid_argument("extract_propagator: grids differ in length");
  }
  if (r.size() < 2) {
    throw std::invalid_argument("extract_propagator: need at least 2 lags");
  }
  const std::size_t L = r.size();
  Eigen::MatrixXd a = response_operator(c);
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(r.data(), L);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd x = lu.solve(rhs);

  // 2-norm condition estimate by a few power iterations on A^T A (largest
  // singular value) and solve-based iterations (smallest).
  Eigen::VectorXd v = Eigen::VectorXd::Ones(L).normalized();
  double smax = 0.0;
  for (int it = 0; it < 8; ++it) {
    v = (a.transpose() * (a * v)).eval();
    smax = std::sqrt(v.norm());
    v.normalize();
  }
  Eigen::VectorXd w = Eigen::VectorXd::Ones(L).normalized();
  double smin_inv = 0.0;
  for (int it = 0; it < 8; ++it) {
    w = lu.solve(lu.transpose().solve(w)).eval();
    smin_inv = std::sqrt(w.norm());
    w.normalize();
  }

  ExtractedPropagator out;
  out.condition = smax * smin_inv;
  double resid = (a * x - rhs).lpNorm<Eigen::Infinity>();
  double scale = std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
  if (!x.allFinite() || resid > 1e-8 * scale || out.condition > 1e12) {
    Eigen::MatrixXd ridge = a.transpose() * a;
    ridge.diagonal().array() += 1e-10;
    x = ridge.ldlt().solve(a.transpose() * rhs);
    out.regularized = true;
  }
  out.g.assign(x.data(), x.data() + L);
  return out;
}

PropagatorShapeFit fit_propagator_shape(const std::vector<double>& g,
                                        double lag_min, double lag_max) {
  if (lag_max <= 0.0) lag_max = static_cast<double>(g.size());
  PropagatorShapeFit best;
  best.rms = std::numeric_limits<double>::infinity();
  for (double ell0 = 0.0; ell0 <= 8.0; ell0 += 0.25) {
    std::vector<double> xs, ys;
    for (std::size_t l = 1; l <= g.size(); ++l) {
      double ld = static_cast<double>(l);
      if (ld < lag_min || ld > lag_max || g[l - 1] <= 0.0) continue;
      xs.push_back(std::log(ell0 * ell0 + ld * ld));
      ys.push_back(std::log(g[l - 1]));
    }
    if (xs.size() < 3) continue;
    LinearFit f = ols(xs, ys);
    double sse = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double e = ys[i] - (f.intercept + f.slope * xs[i]);
      sse += e * e;
    }
    double rms = std::sqrt(sse / static_cast<double>(xs.size()));
    if (rms < best.rms) {
      best.rms = rms;
      best.ell0 = ell0;
      best.beta = -2.0 * f.slope;
      best.gamma0 = std::exp(f.intercept);
    }
  }
  if (!std::isfinite(best.rms)) {
    throw std::invalid_argument("fit_propagator_shape: no usable points");
  }
  return best;
}

}  // namespace mlab
