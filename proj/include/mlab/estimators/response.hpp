#pragma once

#include <cstddef>
#include <vector>

#include "mlab/core/lagged_curve.hpp"
#include "mlab/core/series.hpp"

namespace mlab {

// Lag-l impact curve R_l = E[eps_n (m_{n+l} - m_n)], l = 1..max_lag, with
// batch-mean standard errors. Requires max_lag < series size.
LaggedCurve response_function(const TradeSeries& t, std::size_t max_lag);

// Forward map from a bare single-trade kernel to the measurable response:
//
//   R_l = G(l) + sum_{j=1}^{l-1} C_j G(l-j)
//             + sum_{j>=1} C_j [G(l+j) - G(j)],
//
// where g[k] = G(k+1) and c[k] = C(k+1) share one grid of length J (error
// if they differ). Beyond the grid G plateaus at g[J-1] and C is zero; the
// same convention defines the square system inverted by extract_propagator,
// making the two exact inverses on the grid.
//
// predict_response returns R at l = 1..L (L <= J) via FFT in O(J log J);
// predict_response_direct is the O(J L) reference summation.
std::vector<double> predict_response(const std::vector<double>& g,
                                     const std::vector<double>& c,
                                     std::size_t max_lag);
std::vector<double> predict_response_direct(const std::vector<double>& g,
                                            const std::vector<double>& c,
                                            std::size_t max_lag);

struct ExtractedPropagator {
  std::vector<double> g;     // G(1..L)
  double condition = 0.0;    // 2-norm condition estimate of the system
  bool regularized = false;  // ridge fallback was applied
};

// Inverts the response relation on the shared lag grid (r and c of equal
// length L >= 2). Ill-conditioned systems are re-solved with a 1e-10 ridge
// and flagged.
ExtractedPropagator extract_propagator(const std::vector<double>& r,
                                       const std::vector<double>& c);

struct PropagatorShapeFit {
  double gamma0 = 0.0;  // scale
  double ell0 = 0.0;    // short-lag core
  double beta = 0.0;    // tail exponent
  double rms = 0.0;     // log-space residual
};

// Least-squares fit of g to gamma0 / (ell0^2 + l^2)^{beta/2}, scanning a
// small ell0 grid and solving the rest in log space.
PropagatorShapeFit fit_propagator_shape(const std::vector<double>& g,
                                        double lag_min = 1.0,
                                        double lag_max = 0.0);

}  // namespace mlab
