#include "mlab/core/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace mlab {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double SignedLog::value() const {
  return static_cast<double>(sign) * std::exp(log_abs);
}

SignedLog lgamma_signed(double x) {
  if (x > 0.0) {
    return {std::lgamma(x), 1};
  }
  if (x == std::floor(x)) {
    throw std::invalid_argument("lgamma_signed: pole at non-positive integer");
  }
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  double s = std::sin(kPi * x);
  double log_abs = std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - x);
  return {log_abs, s > 0 ? 1 : -1};
}

double lbinom(double n, double k) {
  if (k < 0 || k > n) throw std::invalid_argument("lbinom: k outside [0, n]");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

SignedLog sl_mul(const SignedLog& a, const SignedLog& b) {
  return {a.log_abs + b.log_abs, a.sign * b.sign};
}

SignedLog sl_div(const SignedLog& a, const SignedLog& b) {
  if (b.sign == 0) throw std::invalid_argument("sl_div: division by zero");
  return {a.log_abs - b.log_abs, a.sign * b.sign};
}

}  // namespace mlab
