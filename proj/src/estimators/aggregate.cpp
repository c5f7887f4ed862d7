#include "mlab/estimators/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlab/core/stats.hpp"

namespace mlab {

std::vector<AggregateImpactCurve> aggregate_impact(
    const TradeSeries& t, const std::vector<std::size_t>& n_list,
    std::size_t n_bins) {
  t.validate();
  if (n_bins < 2) throw std::invalid_argument("aggregate_impact: n_bins < 2");
  std::vector<AggregateImpactCurve> out;
  for (std::size_t N : n_list) {
    if (N == 0 || t.size() / N < 4 * n_bins) {
      throw std::invalid_argument(
          "aggregate_impact: too few windows for the bin count");
    }
    AggregateImpactCurve curve;
    curve.n_agg = N;
    std::size_t n_win = t.size() / N;
    curve.n_windows = n_win;

    std::vector<double> qs(n_win), rs(n_win);
    for (std::size_t w = 0; w < n_win; ++w) {
      double q = 0.0;
      for (std::size_t i = w * N; i < (w + 1) * N; ++i) {
        q += t.sign[i] * t.vol(i);
      }
      qs[w] = q;
      rs[w] = t.mid[(w + 1) * N] - t.mid[w * N];
    }
    curve.q_star = quantile(qs, 0.95) - quantile(qs, 0.05);

    auto bin_of = equal_count_bins(qs, n_bins);
    std::vector<double> sq(n_bins, 0.0), sr(n_bins, 0.0), srr(n_bins, 0.0);
    std::vector<std::size_t> cnt(n_bins, 0);
    for (std::size_t w = 0; w < n_win; ++w) {
      std::size_t b = bin_of[w];
      sq[b] += qs[w];
      sr[b] += rs[w];
      srr[b] += rs[w] * rs[w];
      ++cnt[b];
    }
    for (std::size_t b = 0; b < n_bins; ++b) {
      if (cnt[b] == 0) {
        ++curve.n_bins_dropped;
        continue;
      }
      double nb = static_cast<double>(cnt[b]);
      double mq = sq[b] / nb;
      double mr = sr[b] / nb;
      double vr = std::max(0.0, srr[b] / nb - mr * mr);
      curve.q.push_back(mq);
      curve.r.push_back(mr);
      curve.se.push_back(std::sqrt(vr / nb));
      if (curve.q_star > 0.0) {
        curve.q_rescaled.push_back(mq / curve.q_star);
        curve.r_rescaled.push_back(mr / curve.q_star);
      }
    }
    out.push_back(std::move(curve));
  }
  return out;
}

SingleImpactFit fit_single_impact(const TradeSeries& t, std::size_t n_bins) {
  t.validate();
  if (n_bins < 10) {
    throw std::invalid_argument("fit_single_impact: need at least 10 bins");
  }
  if (t.size() < 4 * n_bins) {
    throw std::invalid_argument("fit_single_impact: series too short");
  }
  std::vector<double> vols(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) vols[i] = t.vol(i);

  auto bin_of = equal_count_bins(vols, n_bins);
  std::vector<double> sv(n_bins, 0.0), si(n_bins, 0.0), sii(n_bins, 0.0);
  std::vector<std::size_t> cnt(n_bins, 0), moved(n_bins, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t b = bin_of[i];
    double impact = t.sign[i] * (t.mid[i + 1] - t.mid[i]);
    sv[b] += vols[i];
    si[b] += impact;
    sii[b] += impact * impact;
    if (t.mid[i + 1] != t.mid[i]) ++moved[b];
    ++cnt[b];
  }

  SingleImpactFit out;
  LaggedCurve curve;  // reuse the lag/value/se layout for the log-log fit
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (cnt[b] == 0) continue;
    double nb = static_cast<double>(cnt[b]);
    double mv = sv[b] / nb;
    double mi = si[b] / nb;
    double vi = std::max(0.0, sii[b] / nb - mi * mi);
    out.v_bin.push_back(mv);
    out.impact.push_back(mi);
    out.impact_se.push_back(std::sqrt(vi / nb));
    out.p_move.push_back(static_cast<double>(moved[b]) / nb);
    curve.lag.push_back(mv);
    curve.value.push_back(mi);
    curve.se.push_back(0.0);
  }
  out.shape = loglog_fit(curve, 0.0, std::numeric_limits<double>::infinity());
  return out;
}

ShuffleResult surrogate_shuffle(const TradeSeries& t, std::size_t bin_len,
                                Rng& rng) {
  t.validate();
  if (bin_len == 0 || t.size() < bin_len) {
    throw std::invalid_argument("surrogate_shuffle: bad bin length");
  }
  std::vector<double> ret(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) ret[i] = t.mid[i + 1] - t.mid[i];

  std::vector<double> shuffled = ret;
  for (std::size_t i = shuffled.size(); i > 1; --i) {
    std::swap(shuffled[i - 1], shuffled[rng.uniform_int(i)]);
  }

  ShuffleResult out;
  out.bin_len = bin_len;
  std::size_t n_bins = t.size() / bin_len;
  out.real_sum.resize(n_bins);
  out.shuffled_sum.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    double sr = 0.0, ss = 0.0;
    for (std::size_t i = b * bin_len; i < (b + 1) * bin_len; ++i) {
      sr += ret[i];
      ss += shuffled[i];
    }
    out.real_sum[b] = sr;
    out.shuffled_sum[b] = ss;
  }
  return out;
}

}  // namespace mlab
