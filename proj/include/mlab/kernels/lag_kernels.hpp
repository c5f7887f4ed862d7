#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mlab::kernels {

// Data-parallel inner loops shared by the estimators. Every kernel has a
// serial reference implementation and an OpenMP variant parallelised over
// lags. Within one lag the summation order is identical in both variants,
// so results match bit for bit regardless of thread count; the *_serial
// versions are kept as the comparison oracle and for the benchmark.

struct LagSums {
  std::vector<double> sum;          // indexed by lag - 1
  std::vector<std::size_t> count;
};

// sum[l-1] = sum_n a[n] * b[n+l] over all n with both indexes valid.
LagSums lag_products_serial(std::span<const double> a,
                            std::span<const double> b, std::size_t max_lag);
LagSums lag_products_omp(std::span<const double> a, std::span<const double> b,
                         std::size_t max_lag);

struct LagStats {
  std::vector<double> mean;  // indexed by lag - 1
  std::vector<double> se;    // non-overlapping batch means
  std::vector<std::size_t> count;
};

// Per-lag mean and batch-mean SE of sign[n] * (mid[n+l] - mid[n]).
// mid must have at least sign.size() + 1 entries. batch_len = 0 picks
// floor(count^(2/3)).
LagStats response_stats_serial(std::span<const int> sign,
                               std::span<const double> mid,
                               std::size_t max_lag, std::size_t batch_len = 0);
LagStats response_stats_omp(std::span<const int> sign,
                            std::span<const double> mid, std::size_t max_lag,
                            std::size_t batch_len = 0);

struct AgentCondSums {
  std::vector<double> same_sum;    // sum of sign products, same label
  std::vector<std::size_t> same_count;
  std::vector<double> diff_sum;    // different labels
  std::vector<std::size_t> diff_count;
};

// Sign products split by whether the two trades carry the same agent label.
AgentCondSums agent_cond_products_serial(std::span<const int> sign,
                                         std::span<const std::int64_t> agent,
                                         std::size_t max_lag);
AgentCondSums agent_cond_products_omp(std::span<const int> sign,
                                      std::span<const std::int64_t> agent,
                                      std::size_t max_lag);

}  // namespace mlab::kernels
