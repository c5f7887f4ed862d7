#include "mlab/theory/aggregate_theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/core/quadrature.hpp"
#include "mlab/core/stats.hpp"

namespace mlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void VolumeDist::validate() const {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("VolumeDist: scale must be positive");
  }
}

double VolumeDist::cf(double lambda) const {
  switch (kind) {
    case Kind::Gaussian:
      return std::exp(-0.5 * scale * scale * lambda * lambda);
    case Kind::Laplace:
      return 1.0 / (1.0 + scale * scale * lambda * lambda);
    case Kind::TwoPoint:
      return std::cos(lambda * scale);
  }
  return 0.0;
}

double VolumeDist::pdf(double v) const {
  switch (kind) {
    case Kind::Gaussian:
      return std::exp(-0.5 * v * v / (scale * scale)) /
             (scale * std::sqrt(2.0 * kPi));
    case Kind::Laplace:
      return 0.5 * std::exp(-std::abs(v) / scale) / scale;
    case Kind::TwoPoint:
      throw std::invalid_argument("VolumeDist: two-point law has no density");
  }
  return 0.0;
}

double VolumeDist::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Gaussian:
      return rng.normal(0.0, scale);
    case Kind::Laplace:
      return static_cast<double>(rng.sign()) * rng.exponential(1.0 / scale);
    case Kind::TwoPoint:
      return static_cast<double>(rng.sign()) * scale;
  }
  return 0.0;
}

void ImpactFn::validate() const {
  if (!(psi > 0.0)) {
    throw std::invalid_argument("ImpactFn: psi must be positive");
  }
}

double ImpactFn::operator()(double v) const {
  if (v == 0.0) return 0.0;
  double mag = scale * std::pow(std::abs(v), psi);
  return v > 0.0 ? mag : -mag;
}

namespace {

// Imaginary part of E[f(v) exp(i lambda v)] for the antisymmetric f:
// closed forms when psi == 1, numeric otherwise.
double impact_transform(const VolumeDist& dist, const ImpactFn& f,
                        double lambda, double* cutoff) {
  if (f.psi == 1.0) {
    double s2 = dist.scale * dist.scale;
    switch (dist.kind) {
      case VolumeDist::Kind::Gaussian:
        return f.scale * s2 * lambda * std::exp(-0.5 * s2 * lambda * lambda);
      case VolumeDist::Kind::Laplace: {
        double den = 1.0 + s2 * lambda * lambda;
        return f.scale * 2.0 * s2 * lambda / (den * den);
      }
      case VolumeDist::Kind::TwoPoint:
        break;
    }
  }
  if (dist.kind == VolumeDist::Kind::TwoPoint) {
    return f.scale * std::pow(dist.scale, f.psi) *
           std::sin(lambda * dist.scale);
  }
  auto integrand = [&](double v) {
    return dist.pdf(v) * std::pow(v, f.psi) * std::sin(lambda * v);
  };
  QuadResult res = integrate_to_inf(integrand, 0.0, 1e-11);
  if (cutoff) *cutoff = std::max(*cutoff, res.cutoff);
  return 2.0 * f.scale * res.value;
}

}  // namespace

AggregateTheoryCurve aggregate_iid_theory(const VolumeDist& dist,
                                          const ImpactFn& f, std::size_t n,
                                          const std::vector<double>& q_grid) {
  dist.validate();
  f.validate();
  if (n == 0) {
    throw std::invalid_argument("aggregate_iid_theory: n must be positive");
  }
  if (q_grid.empty()) {
    throw std::invalid_argument("aggregate_iid_theory: empty Q grid");
  }

  AggregateTheoryCurve out;
  out.q = q_grid;
  out.r.resize(q_grid.size());
  out.se.assign(q_grid.size(), 0.0);

  if (n == 1) {
    for (std::size_t i = 0; i < q_grid.size(); ++i) out.r[i] = f(q_grid[i]);
    return out;
  }
  if (dist.kind == VolumeDist::Kind::TwoPoint) {
    // Conditioning on the aggregate just counts the sign imbalance.
    double slope = f.scale * std::pow(dist.scale, f.psi - 1.0);
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
      out.r[i] = slope * q_grid[i];
    }
    return out;
  }

  double nd = static_cast<double>(n);
  bool bad = false;
  for (std::size_t i = 0; i < q_grid.size() && !bad; ++i) {
    double q = q_grid[i];
    auto dens_ig = [&](double lam) {
      return std::pow(dist.cf(lam), nd) * std::cos(lam * q);
    };
    auto num_ig = [&](double lam) {
      return std::pow(dist.cf(lam), nd - 1.0) *
             impact_transform(dist, f, lam, &out.cutoff);
    };
    QuadResult dens = integrate_to_inf(dens_ig, 0.0, 1e-10);
    QuadResult num = integrate_to_inf(
        [&](double lam) { return num_ig(lam) * std::sin(lam * q); }, 0.0,
        1e-10);
    out.cutoff = std::max({out.cutoff, dens.cutoff, num.cutoff});
    double p = dens.value / kPi;
    double r = nd * num.value / kPi / p;
    if (!(p > 1e-300) || !std::isfinite(r)) {
      bad = true;
      break;
    }
    out.r[i] = r;
  }
  if (!bad) return out;

  // Deep tail or non-integrable combination: estimate by simulation and
  // interpolate the binned means onto the requested grid.
  out.used_mc = true;
  Rng rng(20260814, 7);
  McAggregate mc = aggregate_iid_mc(dist, f, n, 4000000, 64, rng);
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    double q = q_grid[i];
    std::size_t j = 0;
    while (j + 2 < mc.q.size() && mc.q[j + 1] < q) ++j;
    double w = (q - mc.q[j]) / (mc.q[j + 1] - mc.q[j]);
    w = std::clamp(w, 0.0, 1.0);
    out.r[i] = (1.0 - w) * mc.r[j] + w * mc.r[j + 1];
    out.se[i] = std::max(mc.se[j], mc.se[j + 1]);
  }
  return out;
}

McAggregate aggregate_iid_mc(const VolumeDist& dist, const ImpactFn& f,
                             std::size_t n, std::size_t n_windows,
                             std::size_t n_bins, Rng& rng) {
  dist.validate();
  f.validate();
  if (n == 0 || n_bins < 2 || n_windows < 4 * n_bins) {
    throw std::invalid_argument(
        "aggregate_iid_mc: need n >= 1 and n_windows >= 4 n_bins >= 8");
  }
  std::vector<double> q(n_windows), r(n_windows);
  for (std::size_t w = 0; w < n_windows; ++w) {
    double sum_v = 0.0, sum_f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double v = dist.sample(rng);
      sum_v += v;
      sum_f += f(v);
    }
    q[w] = sum_v;
    r[w] = sum_f;
  }
  std::vector<std::size_t> bin = equal_count_bins(q, n_bins);
  McAggregate out;
  out.q.assign(n_bins, 0.0);
  out.r.assign(n_bins, 0.0);
  out.se.assign(n_bins, 0.0);
  std::vector<std::size_t> cnt(n_bins, 0);
  for (std::size_t w = 0; w < n_windows; ++w) {
    out.q[bin[w]] += q[w];
    out.r[bin[w]] += r[w];
    ++cnt[bin[w]];
  }
  for (std::size_t b = 0; b < n_bins; ++b) {
    out.q[b] /= static_cast<double>(cnt[b]);
    out.r[b] /= static_cast<double>(cnt[b]);
  }
  for (std::size_t w = 0; w < n_windows; ++w) {
    double d = r[w] - out.r[bin[w]];
    out.se[bin[w]] += d * d;
  }
  for (std::size_t b = 0; b < n_bins; ++b) {
    double m = static_cast<double>(cnt[b]);
    out.se[b] = std::sqrt(out.se[b] / (m * (m - 1.0)));
  }
  return out;
}

double transient_gain_integral(double s) {
  double phi = 0.5 * std::erfc(-s / std::sqrt(2.0));
  return 2.0 * (1.0 + s * std::exp(0.5 * s * s) *
                          std::sqrt(2.0 * kPi) * phi);
}

std::vector<double> aggregate_transient_theory(double s, double gamma0,
                                               double gamma, std::size_t n,
                                               const std::vector<double>& q) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument(
        "aggregate_transient_theory: gamma must be in (0, 1)");
  }
  if (!(s > 0.0) || !(gamma0 > 0.0) || n == 0) {
    throw std::invalid_argument(
        "aggregate_transient_theory: s, gamma0, n must be positive");
  }
  double beta = 0.5 * (1.0 - gamma);
  double nd = static_cast<double>(n);
  double coef = std::sqrt(nd) * s * gamma0 /
                (transient_gain_integral(s) * (1.0 - beta)) /
                std::pow(nd, 1.0 - 0.5 * gamma);
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = coef * q[i];
  return out;
}

}  // namespace mlab
