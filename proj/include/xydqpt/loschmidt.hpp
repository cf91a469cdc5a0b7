#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xydqpt/coherent_gibbs.hpp"
#include "xydqpt/quadrature.hpp"
#include "xydqpt/spectrum.hpp"

namespace xydqpt {

// Sudden switch pre -> post starting from a coherent Gibbs state of `pre`.
// `sites` empty means the thermodynamic limit.
struct QuenchProtocol {
  ModelParams pre;
  ModelParams post;
  InitialState init;
  std::optional<int> sites;

  void validate() const;
  QuenchProtocol with_beta(double beta) const;
};

// Everything about one momentum pair that the quench observables need.
struct QuenchMode {
  double k = 0.0;
  double eps_pre = 0.0;
  double eps_post = 0.0;
  double cos_2dtheta = 1.0;
  double sin_2dtheta = 0.0;
  BoltzmannWeights weights;
  // Populations of the post-quench eigenstates |eps'_k^+>, |eps'_k^->.
  double p_plus = 0.5;
  double p_minus = 0.5;

  // cos(2 dtheta) tanh(beta eps) - (2/Z) sin(phi) sin(2 dtheta)
  double echo_coefficient = 0.0;
};

QuenchMode quench_mode(const QuenchProtocol& proto, double k);

// G_k(t) = cos(eps'_k t) + i sin(eps'_k t) * echo_coefficient
std::complex<double> mode_amplitude(const QuenchProtocol& proto, double k, double t);
std::complex<double> mode_amplitude(const QuenchMode& mode, double t);

// ln|G_k(t)|, finite down to |G_k|^2 = 1e-300.
double log_mode_modulus(const QuenchMode& mode, double t);

struct RateTrace {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> cusps;
};

// r_N(t) = -(2/N) sum_{k>0} ln|G_k(t)| on the antiperiodic grid of proto.sites.
// Samples where some |G_k| underflows to zero are +inf.
RateTrace rate_finite(const QuenchProtocol& proto, std::span<const double> times,
                      unsigned workers = 1);

// r(t) = -(1/pi) int_0^pi ln|G_k(t)| dk by adaptive quadrature.
double rate_integral_at(const QuenchProtocol& proto, double t,
                        const QuadratureOptions& options = {});
RateTrace rate_integral(const QuenchProtocol& proto, std::span<const double> times,
                        unsigned workers = 1, const QuadratureOptions& options = {});

std::vector<double> uniform_times(double t_min, double t_max, std::size_t count);

struct CuspOptions {
  double mad_factor = 10.0;
  int refine_factor = 10;
  int refine_rounds = 2;
  // Kink test: across one 10x refinement the peak second difference of a true
  // kink shrinks ~10x, a smooth bump ~100x.
  double min_kink_ratio = 1.0 / 30.0;
};

// Non-analytic times of a uniformly sampled trace. With a resampler the
// candidates are localized by repeated local resampling and smooth features
// are rejected by the kink test; without one, coarse grid times are returned.
std::vector<double> detect_cusps(const RateTrace& trace,
                                 const std::function<double(double)>& resample = {},
                                 const CuspOptions& options = {});

}  // namespace xydqpt
