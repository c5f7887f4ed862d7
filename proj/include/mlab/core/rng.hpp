#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mlab {

// Counter-based PRNG (Philox4x32-10). A generator is identified by
// (seed, stream); distinct streams are statistically independent, so parallel
// sweeps can split one root seed into per-cell generators without coordination.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "philox4x32-10";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  // Same seed, different stream: independent sequence.
  Rng split(std::uint64_t stream) const {
    std::uint64_t seed =
        (static_cast<std::uint64_t>(key1_) << 32) | key0_;
    return Rng(seed, stream);
  }

  std::uint32_t next_u32() {
    if (have_ == 0) refill();
    return out_[--have_];
  }

  std::uint64_t next_u64() {
    std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer on [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n must be > 0");
    std::uint64_t mask = ~std::uint64_t{0};
    std::uint64_t limit = mask - mask % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  double normal() {
    if (have_normal_) {
      have_normal_ = false;
      return cached_normal_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(a);
    have_normal_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential(double rate) {
    if (rate <= 0) throw std::invalid_argument("exponential: rate must be > 0");
    return -std::log(1.0 - uniform()) / rate;
  }

  double lognormal(double mu, double sigma) {
    return std::exp(mu + sigma * normal());
  }

  // P(X > x) = (x_min / x)^alpha for x >= x_min.
  double pareto(double alpha, double x_min) {
    if (alpha <= 0 || x_min <= 0)
      throw std::invalid_argument("pareto: alpha and x_min must be > 0");
    return x_min * std::pow(1.0 - uniform(), -1.0 / alpha);
  }

  // Marsaglia–Tsang; unit scale.
  double gamma_rv(double shape) {
    if (shape <= 0) throw std::invalid_argument("gamma_rv: shape must be > 0");
    if (shape < 1.0) {
      double u = 1.0 - uniform();
      return gamma_rv(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0) continue;
      v = v * v * v;
      double u = 1.0 - uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v;
      }
    }
  }

  double chi_squared(double dof) { return 2.0 * gamma_rv(0.5 * dof); }

  double student_t(double dof) {
    if (!(dof > 0)) throw std::invalid_argument("student_t: dof must be > 0");
    if (std::isinf(dof)) return normal();
    return normal() / std::sqrt(chi_squared(dof) / dof);
  }

  int sign() { return (next_u32() & 1u) ? 1 : -1; }

 private:
  static void round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                    std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
    std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c0;
    std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c2;
    std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    std::uint32_t n0 = hi1 ^ c1 ^ k0;
    std::uint32_t n1 = lo1;
    std::uint32_t n2 = hi0 ^ c3 ^ k1;
    std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
  }

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
    std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
    std::uint32_t c2 = stream_lo_;
    std::uint32_t c3 = stream_hi_;
    std::uint32_t k0 = key0_;
    std::uint32_t k1 = key1_;
    for (int r = 0; r < 10; ++r) {
      round(c0, c1, c2, c3, k0, k1);
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    out_[0] = c0;
    out_[1] = c1;
    out_[2] = c2;
    out_[3] = c3;
    have_ = 4;
    ++counter_;
  }

  std::uint32_t key0_, key1_;
  std::uint32_t stream_lo_, stream_hi_;
  std::uint64_t counter_ = 0;
  std::uint32_t out_[4] = {0, 0, 0, 0};
  int have_ = 0;
  bool have_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace mlab
