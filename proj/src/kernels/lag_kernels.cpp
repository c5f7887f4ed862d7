#include "mlab/kernels/lag_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlab::kernels {

namespace {

inline std::size_t valid_count(std::size_t na, std::size_t nb, std::size_t l) {
  // n ranges over 0 .. min(na - 1, nb - 1 - l)
  if (l >= nb) return 0;
  return std::min(na, nb - l);
}

double lag_dot(std::span<const double> a, std::span<const double> b,
               std::size_t l, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i + l];
  return s;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

// Mean and batch-mean SE of v(n), n = 0..count-1, evaluated lazily.
template <typename F>
MeanSe batched_mean(F&& v, std::size_t count, std::size_t batch_len) {
  MeanSe out;
  if (count == 0) return out;
  if (batch_len == 0) {
    batch_len = static_cast<std::size_t>(
        std::pow(static_cast<double>(count), 2.0 / 3.0));
    batch_len = std::max<std::size_t>(batch_len, 1);
  }
  double total = 0.0;
  std::size_t n_batches = count / batch_len;
  double bsum = 0.0, bsum2 = 0.0;
  double cur = 0.0;
  std::size_t in_batch = 0, batches_done = 0;
  for (std::size_t n = 0; n < count; ++n) {
    double x = v(n);
    total += x;
    if (batches_done < n_batches) {
      cur += x;
      if (++in_batch == batch_len) {
        double bm = cur / static_cast<double>(batch_len);
        bsum += bm;
        bsum2 += bm * bm;
        cur = 0.0;
        in_batch = 0;
        ++batches_done;
      }
    }
  }
  out.mean = total / static_cast<double>(count);
  if (n_batches >= 2) {
    double nb = static_cast<double>(n_batches);
    double var = (bsum2 - bsum * bsum / nb) / (nb - 1.0);
    out.se = std::sqrt(std::max(var, 0.0) / nb);
  } else {
    out.se = 0.0;
  }
  return out;
}

}  // namespace

LagSums lag_products_serial(std::span<const double> a,
                            std::span<const double> b, std::size_t max_lag) {
  LagSums out;
  out.sum.resize(max_lag);
  out.count.resize(max_lag);
  for (std::size_t l = 1; l <= max_lag; ++l) {
    std::size_t n = valid_count(a.size(), b.size(), l);
    out.sum[l - 1] = lag_dot(a, b, l, n);
    out.count[l - 1] = n;
  }
  return out;
}

LagSums lag_products_omp(std::span<const double> a, std::span<const double> b,
                         std::size_t max_lag) {
  LagSums out;
  out.sum.resize(max_lag);
  out.count.resize(max_lag);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t li = 1; li <= static_cast<std::int64_t>(max_lag); ++li) {
    std::size_t l = static_cast<std::size_t>(li);
    std::size_t n = valid_count(a.size(), b.size(), l);
    out.sum[l - 1] = lag_dot(a, b, l, n);
    out.count[l - 1] = n;
  }
  return out;
}

namespace {

LagStats response_stats_impl(std::span<const int> sign,
                             std::span<const double> mid, std::size_t max_lag,
                             std::size_t batch_len, bool parallel) {
  if (mid.size() < sign.size() + 1)
    throw std::invalid_argument("response_stats: mid must have n+1 entries");
  LagStats out;
  out.mean.resize(max_lag);
  out.se.resize(max_lag);
  out.count.resize(max_lag);
  auto one_lag = [&](std::size_t l) {
    std::size_t count =
        sign.size() + l <= mid.size() ? sign.size() : mid.size() - l;
    auto v = [&](std::size_t n) {
      return static_cast<double>(sign[n]) * (mid[n + l] - mid[n]);
    };
    MeanSe ms = batched_mean(v, count, batch_len);
    out.mean[l - 1] = ms.mean;
    out.se[l - 1] = ms.se;
    out.count[l - 1] = count;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t l = 1; l <= static_cast<std::int64_t>(max_lag); ++l) {
      one_lag(static_cast<std::size_t>(l));
    }
  } else {
    for (std::size_t l = 1; l <= max_lag; ++l) one_lag(l);
  }
  return out;
}

AgentCondSums agent_cond_impl(std::span<const int> sign,
                              std::span<const std::int64_t> agent,
                              std::size_t max_lag, bool parallel) {
  if (agent.size() != sign.size())
    throw std::invalid_argument("agent_cond_products: size mismatch");
  AgentCondSums out;
  out.same_sum.resize(max_lag);
  out.same_count.resize(max_lag);
  out.diff_sum.resize(max_lag);
  out.diff_count.resize(max_lag);
  auto one_lag = [&](std::size_t l) {
    if (l >= sign.size()) return;
    double ssum = 0.0, dsum = 0.0;
    std::size_t scount = 0, dcount = 0;
    for (std::size_t n = 0; n + l < sign.size(); ++n) {
      double p = static_cast<double>(sign[n] * sign[n + l]);
      if (agent[n] == agent[n + l]) {
        ssum += p;
        ++scount;
      } else {
        dsum += p;
        ++dcount;
      }
    }
    out.same_sum[l - 1] = ssum;
    out.same_count[l - 1] = scount;
    out.diff_sum[l - 1] = dsum;
    out.diff_count[l - 1] = dcount;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t l = 1; l <= static_cast<std::int64_t>(max_lag); ++l) {
      one_lag(static_cast<std::size_t>(l));
    }
  } else {
    for (std::size_t l = 1; l <= max_lag; ++l) one_lag(l);
  }
  return out;
}

}  // namespace

LagStats response_stats_serial(std::span<const int> sign,
                               std::span<const double> mid,
                               std::size_t max_lag, std::size_t batch_len) {
  return response_stats_impl(sign, mid, max_lag, batch_len, false);
}

LagStats response_stats_omp(std::span<const int> sign,
                            std::span<const double> mid, std::size_t max_lag,
                            std::size_t batch_len) {
  return response_stats_impl(sign, mid, max_lag, batch_len, true);
}

AgentCondSums agent_cond_products_serial(std::span<const int> sign,
                                         std::span<const std::int64_t> agent,
                                         std::size_t max_lag) {
  return agent_cond_impl(sign, agent, max_lag, false);
}

AgentCondSums agent_cond_products_omp(std::span<const int> sign,
                                      std::span<const std::int64_t> agent,
                                      std::size_t max_lag) {
  return agent_cond_impl(sign, agent, max_lag, true);
}

}  // namespace mlab::kernels
