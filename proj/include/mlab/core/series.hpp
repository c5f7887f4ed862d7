#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mlab {

// Per-trade view of a market: signs, volumes, prevailing quotes.
// mid has one extra element (mid before trade n for n < size, plus the
// final mid) so single-trade returns mid[n+1] - mid[n] are always defined.
struct TradeSeries {
  std::vector<int> sign;             // +1 buyer-initiated, -1 seller-initiated
  std::vector<double> volume;        // empty => unit volumes
  std::vector<double> mid;           // size n+1
  std::vector<double> spread;        // size n or empty
  std::vector<std::int64_t> agent;   // size n or empty; -1 = unlabeled

  std::size_t size() const { return sign.size(); }

  double vol(std::size_t i) const { return volume.empty() ? 1.0 : volume[i]; }

  void validate() const {
    const std::size_t n = sign.size();
    if (mid.size() != n + 1)
      throw std::invalid_argument("TradeSeries: mid must have size n+1");
    if (!volume.empty() && volume.size() != n)
      throw std::invalid_argument("TradeSeries: volume size mismatch");
    if (!spread.empty() && spread.size() != n)
      throw std::invalid_argument("TradeSeries: spread size mismatch");
    if (!agent.empty() && agent.size() != n)
      throw std::invalid_argument("TradeSeries: agent size mismatch");
    for (int s : sign) {
      if (s != 1 && s != -1)
        throw std::invalid_argument("TradeSeries: signs must be +-1");
    }
  }

  // Return over l trades starting at n (requires n + l <= size()).
  double ret(std::size_t n, std::size_t l) const { return mid[n + l] - mid[n]; }
};

}  // namespace mlab
