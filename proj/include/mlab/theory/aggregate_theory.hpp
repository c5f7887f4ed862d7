#pragma once
// Expected price move conditioned on the signed volume aggregated over N
// trades, for trades whose per-trade move is a deterministic function of
// signed volume.  Two regimes: independent trades (Fourier inversion of the
// conditional expectation, with a Monte-Carlo fallback), and the
// square-root-collapse limit for persistent order flow with a decaying
// kernel.

#include <cstddef>
#include <vector>

#include "mlab/core/rng.hpp"

namespace mlab {

// Symmetric signed-volume distribution with a closed-form characteristic
// function; `scale` is the sd (Gaussian), the exponential scale (Laplace),
// or the atom location (TwoPoint, equal mass at +/- scale).
struct VolumeDist {
  enum class Kind { Gaussian, Laplace, TwoPoint };
  Kind kind = Kind::Gaussian;
  double scale = 1.0;

  double cf(double lambda) const;     // E[exp(i lambda v)], real by symmetry
  double pdf(double v) const;         // density; TwoPoint has none -> error
  double sample(Rng& rng) const;

  void validate() const;
};

// Antisymmetric per-trade impact f(v) = scale * sign(v) |v|^psi.
struct ImpactFn {
  double scale = 1.0;
  double psi = 1.0;

  double operator()(double v) const;
  void validate() const;
};

struct AggregateTheoryCurve {
  std::vector<double> q;
  std::vector<double> r;
  std::vector<double> se;  // nonzero only when the MC fallback ran
  double cutoff = 0.0;     // largest quadrature cutoff in lambda
  bool used_mc = false;
};

// R(Q, N) = E[sum of per-trade moves | sum of signed volumes = Q] on the
// given Q grid.  N = 1 returns f(Q) exactly; two-point volumes reduce to an
// exact linear law; otherwise the conditional expectation is inverted by
// adaptive quadrature over the characteristic variable.
AggregateTheoryCurve aggregate_iid_theory(const VolumeDist& dist,
                                          const ImpactFn& f, std::size_t n,
                                          const std::vector<double>& q_grid);

struct McAggregate {
  std::vector<double> q, r, se;
};

// Monte-Carlo version: sample windows of n trades, bin by aggregate signed
// volume into equal-count bins, average the realized move per bin.
McAggregate aggregate_iid_mc(const VolumeDist& dist, const ImpactFn& f,
                             std::size_t n, std::size_t n_windows,
                             std::size_t n_bins, Rng& rng);

// 2 * int_0^inf u exp(u s - u^2 / 2) du, the gain factor linking the sign
// imbalance scale s to the aggregate slope (closed form via the normal CDF).
double transient_gain_integral(double s);

// Large-N limiting line for persistent flow with kernel exponent
// beta = (1 - gamma) / 2: R = sqrt(N) * s * gamma0 / (I_s (1 - beta)) *
// Q / N^{1 - gamma/2}.  Rescaled curves for different N coincide.
std::vector<double> aggregate_transient_theory(double s, double gamma0,
                                               double gamma, std::size_t n,
                                               const std::vector<double>& q);

}  // namespace mlab
