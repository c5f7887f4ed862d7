#include "mlab/estimators/conditional.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace mlab {

ConditionalReturns conditional_returns(const TradeSeries& t,
                                       std::size_t k_lags,
                                       std::size_t n_bins) {
  t.validate();
  const std::size_t n = t.size();
  if (k_lags == 0 || n < 10 * (k_lags + n_bins)) {
    throw std::invalid_argument("conditional_returns: series too short");
  }

  // Least-squares AR(K) fit of the sign series via the normal equations,
  // which only need the lagged moment sums.
  const std::size_t K = k_lags;
  Eigen::MatrixXd xtx = Eigen::MatrixXd::Zero(K, K);
  Eigen::VectorXd xty = Eigen::VectorXd::Zero(K);
  for (std::size_t i = K; i < n; ++i) {
    for (std::size_t a = 0; a < K; ++a) {
      double sa = t.sign[i - 1 - a];
      xty(a) += sa * t.sign[i];
      for (std::size_t b = a; b < K; ++b) {
        xtx(a, b) += sa * t.sign[i - 1 - b];
      }
    }
  }
  for (std::size_t a = 0; a < K; ++a) {
    for (std::size_t b = 0; b < a; ++b) xtx(a, b) = xtx(b, a);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(xtx);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("conditional_returns: singular design matrix");
  }
  Eigen::VectorXd coef = lu.solve(xty);

  ConditionalReturns out;
  out.ar_coeffs.assign(coef.data(), coef.data() + K);

  std::vector<double> pred(n - K);
  std::vector<double> ret(n - K);
  std::vector<int> eps(n - K);
  for (std::size_t i = K; i < n; ++i) {
    double p = 0.0;
    for (std::size_t a = 0; a < K; ++a) p += coef(a) * t.sign[i - 1 - a];
    pred[i - K] = p;
    ret[i - K] = t.mid[i + 1] - t.mid[i];
    eps[i - K] = t.sign[i];
  }

  auto bin_of = equal_count_bins(pred, n_bins);
  struct Acc {
    double sp = 0, spp = 0, sm = 0, smm = 0, sx = 0;
    double sr = 0, srr = 0;
    std::size_t np = 0, nm = 0;
  };
  std::vector<Acc> acc(n_bins);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    Acc& a = acc[bin_of[i]];
    a.sx += pred[i];
    double r = ret[i];
    a.sr += r;
    a.srr += r * r;
    if (eps[i] > 0) {
      a.sp += r;
      a.spp += r * r;
      ++a.np;
    } else {
      a.sm += r;
      a.smm += r * r;
      ++a.nm;
    }
  }

  std::vector<double> centers, rplus, rminus;
  for (const Acc& a : acc) {
    std::size_t tot = a.np + a.nm;
    if (a.np == 0 || a.nm == 0) continue;  // one-sided bin: no r+/r- pair
    double np = static_cast<double>(a.np), nm = static_cast<double>(a.nm);
    double mp = a.sp / np;
    double mm = a.sm / nm;
    double vp = std::max(0.0, a.spp / np - mp * mp);
    double vm = std::max(0.0, a.smm / nm - mm * mm);
    out.bin_center.push_back(a.sx / static_cast<double>(tot));
    out.r_plus.push_back(mp);
    out.r_plus_se.push_back(std::sqrt(vp / np));
    out.r_minus.push_back(-mm);
    out.r_minus_se.push_back(std::sqrt(vm / nm));
    out.phi_plus.push_back(np / static_cast<double>(tot));
    double mr = a.sr / static_cast<double>(tot);
    double vr = std::max(0.0, a.srr / static_cast<double>(tot) - mr * mr);
    out.martingale.push_back(mr);
    out.martingale_se.push_back(std::sqrt(vr / static_cast<double>(tot)));
  }
  out.plus_fit = ols(out.bin_center, out.r_plus);
  out.minus_fit = ols(out.bin_center, out.r_minus);
  return out;
}

}  // namespace mlab
