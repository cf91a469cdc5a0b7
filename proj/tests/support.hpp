#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "xydqpt/loschmidt.hpp"
#include "xydqpt/pfaffian.hpp"

namespace xydqpt::test {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPhiDefault = -std::numbers::pi / 2;

// Seeded generators for property tests. Each test owns its own instance so
// failures reproduce from the seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  template <typename T, std::size_t N>
  const T& pick(const T (&items)[N]) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(N) - 1))];
  }

  ModelParams params() { return {uniform(-1.0, 1.0), uniform(0.0, 2.0)}; }
  // Keeps clear of gap closings (lambda = 1, and gamma = 0 below lambda = 1).
  ModelParams gapped_params() {
    for (;;) {
      const ModelParams p = params();
      if (std::abs(p.lambda - 1.0) > 0.05 && (p.lambda > 1.0 || std::abs(p.gamma) > 0.05)) return p;
    }
  }
  double momentum() { return uniform(1e-3, kPi - 1e-3); }
  InitialState init(double beta_max = 10.0) { return {uniform(0.0, beta_max), uniform(-kPi, kPi)}; }
  QuenchProtocol protocol(double beta_max = 10.0) {
    return {gapped_params(), gapped_params(), init(beta_max), std::nullopt};
  }
  std::complex<double> complex_unit() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
  SkewMatrix skew(std::size_t dim) {
    SkewMatrix a(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = r + 1; c < dim; ++c) a.set_upper(r, c, complex_unit());
    }
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace xydqpt::test
