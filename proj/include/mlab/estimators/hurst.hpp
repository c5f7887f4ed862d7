#pragma once

#include <cstddef>
#include <vector>

namespace mlab {

enum class HurstMethod { Rs, LoModified };

struct HurstResult {
  double h = 0.5;        // rescaled-range estimate (both methods)
  double stat = 0.0;     // LoModified: the V statistic Q_n / sqrt(n)
  std::size_t bandwidth = 0;  // Newey-West lag window q actually used
  bool reject_short_memory = false;  // V outside the 5% band (LoModified)
};

// Hurst exponent of a series, n >= 1000.
//
// Rs: rescaled-range slope with the Anis-Lloyd finite-sample correction
// (the iid expectation of R/S is subtracted before fitting, recentering
// the estimate at 1/2).
//
// LoModified: additionally computes Lo's modified R/S statistic with a
// Newey-West variance using bandwidth q = floor(4 (n/100)^{1/4}) (or the
// supplied q), and tests the short-memory null at the 5% level (acceptance
// band [0.809, 1.862]).
HurstResult hurst(const std::vector<double>& x, HurstMethod method,
                  std::size_t q = 0);

}  // namespace mlab
