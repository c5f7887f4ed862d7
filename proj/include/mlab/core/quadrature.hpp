#pragma once

#include <cstddef>

namespace mlab {

// 12-point Gauss-Legendre rule on [-1, 1]: exact for polynomials up to
// degree 23, which makes short smooth panels accurate to machine precision.
inline constexpr double kGl12Node[12] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
    -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
    0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
    0.7699026741943047,  0.9041172563704749,  0.9815606342467192};

inline constexpr double kGl12Weight[12] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
    0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

template <typename F>
double gauss12(F&& f, double a, double b) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 12; ++i) {
    sum += kGl12Weight[i] * f(mid + half * kGl12Node[i]);
  }
  return sum * half;
}

// Composite rule over n_panels equal panels of [a, b].
template <typename F>
double gauss12_panels(F&& f, double a, double b, std::size_t n_panels) {
  if (n_panels == 0) n_panels = 1;
  double width = (b - a) / static_cast<double>(n_panels);
  double sum = 0.0;
  for (std::size_t k = 0; k < n_panels; ++k) {
    double lo = a + width * static_cast<double>(k);
    sum += gauss12(f, lo, lo + width);
  }
  return sum;
}

}  // namespace mlab
