#pragma once

namespace mlab {

struct SignedLog {
  double log_abs;
  int sign;  // -1, 0, +1

  double value() const;
};

// log|Gamma(x)| with explicit sign; valid for any non-pole x,
// including negative non-integers (via reflection).
SignedLog lgamma_signed(double x);

// log of the binomial coefficient C(n, k) for real n > k >= 0 integers.
double lbinom(double n, double k);

SignedLog sl_mul(const SignedLog& a, const SignedLog& b);
SignedLog sl_div(const SignedLog& a, const SignedLog& b);

}  // namespace mlab
