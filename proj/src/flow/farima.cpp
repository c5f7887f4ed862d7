#include "mlab/flow/farima.hpp"

#include <cmath>
#include <stdexcept>

#include "mlab/core/fft.hpp"
#include "mlab/core/specfun.hpp"

namespace mlab {

namespace {
void check_hurst(double hurst) {
  if (!(hurst > 0.5) || !(hurst < 1.0)) {
    throw std::invalid_argument("hurst must lie in (0.5, 1)");
  }
}
}  // namespace

std::vector<double> farima_coeffs(std::size_t k_lags, double hurst) {
  check_hurst(hurst);
  if (k_lags == 0) throw std::invalid_argument("farima_coeffs: k_lags == 0");
  double k = static_cast<double>(k_lags);
  SignedLog denom = sl_mul(lgamma_signed(0.5 - hurst),
                           lgamma_signed(k - hurst + 1.5));
  std::vector<double> a(k_lags);
  for (std::size_t i = 1; i <= k_lags; ++i) {
    double di = static_cast<double>(i);
    SignedLog num = sl_mul(lgamma_signed(di - hurst + 0.5),
                           lgamma_signed(k - hurst - di + 1.5));
    SignedLog term = sl_div(num, denom);
    term.log_abs += lbinom(k, di);
    term.sign = -term.sign;
    a[i - 1] = term.value();
  }
  return a;
}

std::vector<double> farima_ma_weights(std::size_t n, double hurst) {
  check_hurst(hurst);
  double d = hurst - 0.5;
  std::vector<double> psi(n);
  if (n == 0) return psi;
  psi[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    psi[j] = psi[j - 1] * (static_cast<double>(j) - 1.0 + d) /
             static_cast<double>(j);
  }
  return psi;
}

FarimaSeries gen_signs_farima(std::size_t n, double hurst, Rng& rng) {
  check_hurst(hurst);
  FarimaSeries out;
  if (n == 0) return out;
  std::vector<double> eta(n);
  for (double& e : eta) e = rng.normal();
  std::vector<double> psi = farima_ma_weights(n, hurst);
  std::vector<double> conv = fft_convolve(psi, eta);
  out.x.assign(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(n));
  out.sign.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.sign[i] = out.x[i] >= 0.0 ? 1 : -1;
  }
  return out;
}

}  // namespace mlab
