#include "mlab/shape/theory_shape.hpp"

#include <cmath>
#include <stdexcept>

#include "mlab/core/quadrature.hpp"

namespace mlab {

namespace {

// int_0^eps u^(-1-mu) sinh(u) du by term-wise integration of the sinh
// series; converges in a handful of terms for eps <= 1.
double sinh_moment_series(double eps, double mu) {
  double sum = 0.0;
  double factorial = 1.0;  // (2k+1)!
  for (int k = 0; k < 24; ++k) {
    double order = 2.0 * k + 1.0;
    double term = std::pow(eps, order - mu) / (factorial * (order - mu));
    sum += term;
    if (term < 1e-18 * sum) break;
    factorial *= (order + 1.0) * (order + 2.0);
  }
  return sum;
}

// int_0^inf (delta + s)^(-1-mu) exp(-s) ds for delta > 0. Unit-width
// Gauss-Legendre panels; the truncation error at s = 70 is ~1e-31.
double shifted_tail(double delta, double mu) {
  auto f = [delta, mu](double s) {
    return std::pow(delta + s, -1.0 - mu) * std::exp(-s);
  };
  return gauss12_panels(f, 0.0, 70.0, 70);
}

// int_delta^1 u^(-1-mu) exp(-u) du for 0 < delta < 1, by expanding the
// exponential; every power of u integrates in closed form and mu in (0, 1)
// keeps all denominators away from zero.
double tail_below_one(double delta, double mu) {
  double sum = 0.0;
  double sign = 1.0;
  double factorial = 1.0;
  for (int k = 0; k <= 28; ++k) {
    if (k > 0) {
      factorial *= static_cast<double>(k);
      sign = -sign;
    }
    double denom = static_cast<double>(k) - mu;
    sum += sign / factorial * (1.0 - std::pow(delta, denom)) / denom;
    if (factorial > 1e19) break;
  }
  return sum;
}

}  // namespace

void BookShapeParams::validate() const {
  if (flow == Flow::kPowerLaw && !(mu_lp > 0.0)) {
    throw std::invalid_argument("BookShapeParams: mu_lp must be > 0");
  }
  if (flow == Flow::kExponential && !(beta_e > 0.0)) {
    throw std::invalid_argument("BookShapeParams: beta_e must be > 0");
  }
  if (!(diffusion > 0.0) || !(cancel > 0.0)) {
    throw std::invalid_argument(
        "BookShapeParams: diffusion and cancel must be > 0");
  }
}

double zi_spread_eos(double mu, double rho0, double nu) {
  if (!(mu > 0.0) || !(rho0 > 0.0) || nu < 0.0) {
    throw std::invalid_argument("zi_spread_eos: rates must be positive");
  }
  return mu / rho0 * (0.28 + 1.86 * std::pow(nu / mu, 0.75));
}

double book_master_curve(double mu, double delta) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw std::invalid_argument(
        "book_master_curve: mu must be in (0, 1) for the rescaled profile");
  }
  if (delta < 0.0 || !std::isfinite(delta)) {
    throw std::invalid_argument("book_master_curve: delta must be >= 0");
  }
  if (delta == 0.0) return 0.0;

  // Inner part: exp(-delta) int_0^delta u^(-1-mu) sinh(u) du. The series
  // handles the u^(-mu) singularity on [0, eps]; beyond eps the integrand
  // is folded with exp(-delta) so every factor stays bounded:
  //   u^(-1-mu) sinh(u) exp(-delta)
  //     = 0.5 u^(-1-mu) (-expm1(-2u)) exp(u - delta).
  double eps = std::min(delta, 1.0);
  double inner = std::exp(-delta) * sinh_moment_series(eps, mu);
  if (delta > eps) {
    auto f = [delta, mu](double u) {
      return 0.5 * std::pow(u, -1.0 - mu) * (-std::expm1(-2.0 * u)) *
             std::exp(u - delta);
    };
    auto n = static_cast<std::size_t>(std::ceil(2.0 * (delta - eps))) + 1;
    inner += gauss12_panels(f, eps, delta, n);
  }

  // Outer part: sinh(delta) int_delta^inf u^(-1-mu) exp(-u) du, with
  // sinh(delta) exp(-delta) = 0.5 (1 - exp(-2 delta)) factored analytically
  // so nothing overflows at large delta.
  double outer;
  if (delta >= 1.0) {
    outer = 0.5 * (-std::expm1(-2.0 * delta)) * shifted_tail(delta, mu);
  } else {
    double beyond_one = std::exp(-1.0) * shifted_tail(1.0, mu);
    outer = std::sinh(delta) * (tail_below_one(delta, mu) + beyond_one);
  }
  return inner + outer;
}

std::vector<double> mean_book_theory(const BookShapeParams& params,
                                     const std::vector<double>& delta) {
  params.validate();
  double alpha = params.alpha_bs();
  std::vector<double> phi;
  phi.reserve(delta.size());
  for (double d : delta) {
    if (d < 0.0 || !std::isfinite(d)) {
      throw std::invalid_argument("mean_book_theory: distances must be >= 0");
    }
    if (params.flow == BookShapeParams::Flow::kExponential) {
      double beta = params.beta_e;
      double t = (alpha - beta) * d;
      // (1 - exp(-t)) / (alpha - beta), continuous through alpha == beta.
      double ramp = std::abs(t) > 1e-6
                        ? -std::expm1(-t) / (alpha - beta)
                        : d * (1.0 - 0.5 * t + t * t / 6.0);
      phi.push_back(alpha * beta * std::exp(-beta * d) * ramp);
    } else {
      phi.push_back(book_master_curve(params.mu_lp, alpha * d));
    }
  }
  return phi;
}

}  // namespace mlab
