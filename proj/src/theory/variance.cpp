#include "mlab/theory/variance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/core/fft.hpp"

namespace mlab {

void PropagatorModel::validate() const {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("PropagatorModel: beta must be in [0, 1)");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("PropagatorModel: gamma must be in (0, 1)");
  }
  if (sigma_sq < 0.0) {
    throw std::invalid_argument("PropagatorModel: negative noise variance");
  }
  if (!(gamma0 > 0.0) || c0 < 0.0 || ell0 < 0.0) {
    throw std::invalid_argument("PropagatorModel: bad scale parameter");
  }
}

double PropagatorModel::g(double ell) const {
  return gamma0 / std::pow(ell0 * ell0 + ell * ell, 0.5 * beta);
}

double PropagatorModel::c(double ell) const {
  return c0 * std::pow(ell, -gamma);
}

std::vector<double> PropagatorModel::g_grid(std::size_t len) const {
  std::vector<double> out(len);
  for (std::size_t j = 0; j < len; ++j) out[j] = g(static_cast<double>(j + 1));
  return out;
}

std::vector<double> PropagatorModel::c_grid(std::size_t len) const {
  std::vector<double> out(len);
  for (std::size_t j = 0; j < len; ++j) out[j] = c(static_cast<double>(j + 1));
  return out;
}

VarianceCurve variance_curve(const std::vector<double>& g,
                             const std::vector<double>& c, double sigma_sq,
                             std::size_t max_lag) {
  const std::size_t J = g.size();
  const std::size_t L = max_lag;
  if (J == 0 || L == 0) {
    throw std::invalid_argument("variance_curve: empty grid or zero lag");
  }
  if (c.size() != J) {
    throw std::invalid_argument(
        "variance_curve: kernel and correlation must share one grid");
  }
  if (sigma_sq < 0.0) {
    throw std::invalid_argument("variance_curve: negative noise variance");
  }

  VarianceCurve out;
  out.cost_warning = L > 10000;

  // Return weights: r_t = sum_j dg(j) s_{t-j} + noise, with dg(0) = G(1)
  // and dg(j) = G(j+1) - G(j); the plateau makes dg vanish beyond the grid.
  std::vector<double> dg(J);
  dg[0] = g[0];
  for (std::size_t j = 1; j < J; ++j) dg[j] = g[j] - g[j - 1];

  // C(x) with C(0) = 1, grid values at 1..J, zero beyond.
  auto corr = [&](std::size_t x) -> double {
    if (x == 0) return 1.0;
    return x <= J ? c[x - 1] : 0.0;
  };

  // Return autocovariance (sign part): psi(tau) = sum_d e(d) C(tau - d)
  // over d = -(J-1)..(J-1), with e(d) the lag products of dg.
  std::vector<double> e = fft_autocorr_sums(dg, J - 1);

  std::vector<double> c_shift(J - 1 + L);  // C(|i - (J-1)|)
  for (std::size_t i = 0; i < c_shift.size(); ++i) {
    std::size_t x = i >= J - 1 ? i - (J - 1) : (J - 1) - i;
    c_shift[i] = corr(x);
  }
  std::vector<double> part1 = fft_convolve(e, c_shift);

  std::vector<double> e0 = e;
  e0[0] = 0.0;
  std::vector<double> c_one(J + L - 1);
  for (std::size_t x = 0; x < c_one.size(); ++x) c_one[x] = corr(x);
  std::vector<double> part2 = fft_crosscorr_sums(e0, c_one, L - 1);

  std::vector<double> psi(L);
  for (std::size_t tau = 0; tau < L; ++tau) {
    psi[tau] = part1[tau + J - 1] + part2[tau];
  }

  // V_l = sigma_sq l + sum_{t,t'<l} psi(|t-t'|) via running sums.
  out.v.resize(L);
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t l = 1; l <= L; ++l) {
    if (l >= 2) {
      double tau = static_cast<double>(l - 1);
      s1 += psi[l - 1];
      s2 += tau * psi[l - 1];
    }
    out.v[l - 1] = sigma_sq * static_cast<double>(l) +
                   static_cast<double>(l) * psi[0] +
                   2.0 * (static_cast<double>(l) * s1 - s2);
  }

  // Delta(l) = (V_l - sigma_sq l - sum_{i<=l} G(i)^2 - sum_j D_l(j)^2) / 2,
  // with D_l(j) = G(l+j) - G(j) vanishing for j >= J by the plateau.
  auto g_at = [&](std::size_t i) { return g[std::min(i, J) - 1]; };
  std::vector<double> ps2(J + L);  // prefix sums of G(m)^2, m = 1..J+L-1
  ps2[0] = 0.0;
  for (std::size_t m = 1; m < J + L; ++m) {
    ps2[m] = ps2[m - 1] + g_at(m) * g_at(m);
  }

  std::vector<double> cross(L + 1, 0.0);
  double head_sq = 0.0;  // sum_{j=1}^{J-1} G(j)^2
  if (J >= 2) {
    std::vector<double> ga(g.begin(), g.end() - 1);  // G(1..J-1)
    std::vector<double> gb(J + L - 1);               // G(1..J+L-1), plateau
    for (std::size_t n = 0; n < gb.size(); ++n) gb[n] = g_at(n + 1);
    cross = fft_crosscorr_sums(ga, gb, L);
    head_sq = ps2[J - 1];
  }

  out.delta.resize(L);
  for (std::size_t l = 1; l <= L; ++l) {
    double old_sq = 0.0;
    if (J >= 2) {
      old_sq = (ps2[std::min(l + J - 1, J + L - 1)] - ps2[std::min(l, J + L - 1)]) +
               head_sq - 2.0 * cross[l];
    }
    out.delta[l - 1] =
        0.5 * (out.v[l - 1] - sigma_sq * static_cast<double>(l) - ps2[l] -
               old_sq);
  }
  return out;
}

namespace {

// 12-point Gauss-Legendre rule (positive abscissae and weights).
constexpr double kGlx[6] = {0.1252334085114689154724, 0.3678314989981801937527,
                            0.5873179542866174472967, 0.7699026741943046870369,
                            0.9041172563704748566785, 0.9815606342467192506906};
constexpr double kGlw[6] = {0.2491470458134027850006, 0.2334925365383548087609,
                            0.2031674267230659217490, 0.1600783285433462263347,
                            0.1069393259953184309603, 0.0471753363865118271946};

template <class F>
double gl12(const F& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a), acc = 0.0;
  for (int i = 0; i < 6; ++i) {
    acc += kGlw[i] * (f(c + h * kGlx[i]) + f(c - h * kGlx[i]));
  }
  return acc * h;
}

// Integral over (0, wmax] of a function analytic away from zero and bounded
// at it: geometric panels toward the origin, each handled spectrally.
template <class F>
double gl_to_zero(const F& f, double wmax) {
  double total = 0.0, hi = wmax;
  for (int k = 0; k < 44; ++k) {
    double lo = 0.5 * hi;
    total += gl12(f, lo, hi);
    hi = lo;
  }
  return total;
}

// Integral over (a, b) of an integrand with integrable power blow-ups
// (v-a)^{-pa} and (b-v)^{-pb} at the endpoints: each half is flattened by
// the exact power substitution, leaving a bounded integrand.  The callback
// receives the distance to the nearest endpoint exactly (before it is
// re-rounded through v), so singular factors at that endpoint stay finite
// however deep the panels go.
template <class F>
double gl_sing(const F& f, double a, double b, double pa, double pb) {
  if (!(b > a)) return 0.0;
  double m = 0.5 * (a + b);
  double total = 0.0;
  auto half = [&](double p, bool from_lo) {
    double q = 1.0 - p;
    double wmax = std::pow(from_lo ? m - a : b - m, q);
    total += gl_to_zero(
        [&](double w) {
          double off = std::pow(w, 1.0 / q);
          double v = from_lo ? a + off : b - off;
          return f(v, off, from_lo) * off / (q * w);
        },
        wmax);
  };
  half(pa, true);
  half(pb, false);
  return total;
}

struct AmplitudeIntegrand {
  double gamma, beta;

  // phi(u) = u^{-beta} - (u-1)_+^{-beta}: the scaled weight with which a
  // past sign enters the price change over one unit of scaled time.
  // u_off, off_at_1: exact distances to 0 and 1 when known by the caller
  // (negative = unknown, fall back to direct evaluation).
  double phi(double u, double u_off = -1.0, double off_at_1 = -1.0) const {
    if (u <= 0.0 && u_off <= 0.0) return 0.0;
    double base = std::pow(u_off > 0.0 ? u_off : u, -beta);
    if (off_at_1 > 0.0) return base - std::pow(off_at_1, -beta);
    if (u > 2.0) {
      // Difference of two close powers: factored form avoids cancellation.
      return base * (-std::expm1(-beta * std::log1p(-1.0 / u)));
    }
    if (u > 1.0) return base - std::pow(u - 1.0, -beta);
    return base;
  }

  // Series tail of int_V^inf phi(v) (v-u)^{-gamma} dv (valid for V >> u, 1).
  double tail(double u, double big_v) const {
    double total = 0.0;
    double bm = 1.0;  // rising(beta, m) / m!
    for (int m = 1; m <= 12; ++m) {
      bm *= (beta + m - 1) / m;
      double ak = 1.0;  // rising(gamma, k) / k!
      for (int k = 0; m + k <= 12; ++k) {
        if (k > 0) ak *= (gamma + k - 1) / k;
        double p = beta + gamma + m + k - 1.0;
        total -= bm * ak * std::pow(u, k) * std::pow(big_v, -p) / p;
      }
    }
    return total;
  }

  // Psi(u) = int_0^inf phi(v) |u - v|^{-gamma} dv.
  double psi(double u) const {
    double big_v = 64.0 * std::max(1.0, u);
    double bps[5] = {0.0, 1.0, 2.0, u, big_v};
    std::sort(bps, bps + 5);
    double total = tail(u, big_v);
    for (int i = 0; i + 1 < 5; ++i) {
      double lo = bps[i], hi = bps[i + 1];
      if (!(hi > lo * (1.0 + 1e-14) + 1e-300)) continue;
      if (hi > big_v) break;
      double pa = 0.0, pb = 0.0;
      if (lo == 0.0 || lo == 1.0) pa = beta;
      if (lo == u) pa = std::max(pa, gamma);
      if (hi == u) pb = gamma;
      auto f = [&](double v, double off, bool from_lo) {
        double base = from_lo ? lo : hi;
        double du = base == u ? off : std::abs(u - v);
        double v_off = (from_lo && lo == 0.0) ? off : -1.0;
        double one_off = (from_lo && lo == 1.0) ? off : -1.0;
        return phi(v, v_off, one_off) * std::pow(du, -gamma);
      };
      total += gl_sing(f, lo, hi, pa, pb);
    }
    return total;
  }
};

}  // namespace

double variance_amplitude(double gamma, double beta, double tol) {
  if (!(gamma > 0.0 && gamma < 1.0) || !(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument(
        "variance_amplitude: need gamma in (0,1), beta in [0,1)");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("variance_amplitude: tol must be positive");
  }
  if (beta == 0.0) {  // flat kernel: closed form
    return 1.0 / ((1.0 - gamma) * (2.0 - gamma));
  }
  AmplitudeIntegrand a{gamma, beta};

  // I = 1/2 int phi(u) Psi(u) du.  phi blows up like u^{-beta} at 0 and
  // (u-1)^{-beta} just past 1; Psi adds |u-1|^{1-beta-gamma} kinks, so the
  // effective endpoint exponents are:
  double p0 = std::max(beta, 2.0 * beta + gamma - 1.0);       // u -> 0+, 1+
  double p1m = std::max(0.0, beta + gamma - 1.0);             // u -> 1-
  auto outer01 = [&](double u, double off, bool from_lo) {
    return a.phi(u, from_lo ? off : -1.0, -1.0) * a.psi(u);
  };
  auto outer12 = [&](double u, double off, bool from_lo) {
    return a.phi(u, -1.0, from_lo ? off : -1.0) * a.psi(u);
  };
  double total = gl_sing(outer01, 0.0, 1.0, p0, p1m);
  total += gl_sing(outer12, 1.0, 2.0, p0, 0.0);
  // Far wing mapped to (0, 1] by u = 2/t; the image vanishes at t -> 0.
  total += gl_to_zero(
      [&](double t) {
        double u = 2.0 / t;
        return a.phi(u) * a.psi(u) * 2.0 / (t * t);
      },
      1.0);
  return 0.5 * total;
}

double delta_asymptotic(const PropagatorModel& m, double ell) {
  m.validate();
  return m.gamma0 * m.gamma0 * m.c0 * variance_amplitude(m.gamma, m.beta) *
         std::pow(ell, 2.0 - 2.0 * m.beta - m.gamma);
}

double response_prefactor(double gamma, double beta, double c0,
                          double gamma0) {
  if (!(gamma > 0.0 && gamma < 1.0) || !(beta > 0.0) ||
      !(beta + gamma < 1.0)) {
    throw std::invalid_argument(
        "response_prefactor: need gamma in (0,1), beta > 0, beta+gamma < 1");
  }
  const double pi = 3.14159265358979323846;
  double bracket =
      pi / std::sin(pi * beta) - pi / std::sin(pi * (1.0 - beta - gamma));
  return gamma0 * c0 * std::exp(std::lgamma(1.0 - gamma) -
                                std::lgamma(beta) -
                                std::lgamma(2.0 - beta - gamma)) *
         bracket;
}

double beta_critical(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("beta_critical: need gamma in (0, 1)");
  }
  const double pi = 3.14159265358979323846;
  auto bracket = [&](double b) {
    return pi / std::sin(pi * b) - pi / std::sin(pi * (1.0 - b - gamma));
  };
  double lo = 1e-12, hi = 1.0 - gamma - 1e-12;
  double flo = bracket(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = bracket(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mlab
