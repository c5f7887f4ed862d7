#include "mlab/core/fft.hpp"

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace mlab {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

struct FftBuffers {
  std::size_t n = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan fwd{};
  fftw_plan inv{};

  explicit FftBuffers(std::size_t size) : n(size) {
    real = fftw_alloc_real(n);
    spec = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, FFTW_ESTIMATE);
    inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, FFTW_ESTIMATE);
  }

  ~FftBuffers() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(real);
    fftw_free(spec);
  }

  FftBuffers(const FftBuffers&) = delete;
  FftBuffers& operator=(const FftBuffers&) = delete;
};

}  // namespace

std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = next_pow2(out_len);
  FftBuffers buf(n);
  std::size_t nc = n / 2 + 1;
  std::vector<std::complex<double>> fa(nc);

  std::memset(buf.real, 0, n * sizeof(double));
  std::memcpy(buf.real, a.data(), a.size() * sizeof(double));
  fftw_execute(buf.fwd);
  for (std::size_t i = 0; i < nc; ++i)
    fa[i] = {buf.spec[i][0], buf.spec[i][1]};

  std::memset(buf.real, 0, n * sizeof(double));
  std::memcpy(buf.real, b.data(), b.size() * sizeof(double));
  fftw_execute(buf.fwd);

  auto* spec = reinterpret_cast<std::complex<double>*>(buf.spec);
  for (std::size_t i = 0; i < nc; ++i) spec[i] *= fa[i] / static_cast<double>(n);
  fftw_execute(buf.inv);

  return std::vector<double>(buf.real, buf.real + out_len);
}

std::vector<double> fft_crosscorr_sums(const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       std::size_t max_lag) {
  if (a.empty() || b.empty() || a.size() > b.size())
    throw std::invalid_argument("fft_crosscorr_sums: size mismatch");
  std::size_t len = b.size();
  max_lag = std::min(max_lag, len - 1);
  std::size_t n = next_pow2(len + max_lag + 1);
  FftBuffers buf(n);
  std::size_t nc = n / 2 + 1;
  std::vector<std::complex<double>> fa(nc);

  std::memset(buf.real, 0, n * sizeof(double));
  std::memcpy(buf.real, a.data(), a.size() * sizeof(double));
  fftw_execute(buf.fwd);
  for (std::size_t i = 0; i < nc; ++i)
    fa[i] = {buf.spec[i][0], buf.spec[i][1]};

  std::memset(buf.real, 0, n * sizeof(double));
  std::memcpy(buf.real, b.data(), len * sizeof(double));
  fftw_execute(buf.fwd);

  auto* spec = reinterpret_cast<std::complex<double>*>(buf.spec);
  for (std::size_t i = 0; i < nc; ++i) {
    spec[i] *= std::conj(fa[i]) / static_cast<double>(n);
  }
  fftw_execute(buf.inv);

  return std::vector<double>(buf.real, buf.real + max_lag + 1);
}

std::vector<double> fft_autocorr_sums(const std::vector<double>& x,
                                      std::size_t max_lag) {
  return fft_crosscorr_sums(x, x, max_lag);
}

}  // namespace mlab
