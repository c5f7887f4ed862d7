#pragma once

#include <cstddef>
#include <vector>

namespace mlab {

// Linear convolution (sizes add, minus one).
std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b);

// Raw lagged sums s[l] = sum_n x[n] * x[n+l], l = 0..max_lag.
std::vector<double> fft_autocorr_sums(const std::vector<double>& x,
                                      std::size_t max_lag);

// Raw lagged cross sums s[l] = sum_n a[n] * b[n+l], l = 0..max_lag.
// a may be shorter than b (it is zero-padded on the right); a longer than
// b is rejected.
std::vector<double> fft_crosscorr_sums(const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       std::size_t max_lag);

}  // namespace mlab
