#include "xydqpt/loschmidt.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xydqpt/errors.hpp"
#include "xydqpt/parallel.hpp"

namespace xydqpt {

void QuenchProtocol::validate() const {
  pre.validate();
  post.validate();
  init.validate();
  if (sites && (*sites < 4 || *sites % 2 != 0)) {
    throw Error(ErrorCode::InvalidArgument,
                "finite chain length must be even and >= 4, got " + std::to_string(*sites));
  }
}

QuenchProtocol QuenchProtocol::with_beta(double beta) const {
  QuenchProtocol p = *this;
  p.init.beta = beta;
  return p;
}

QuenchMode quench_mode(const QuenchProtocol& proto, double k) {
  QuenchMode m;
  m.k = k;
  m.eps_pre = dispersion(proto.pre, k);
  m.eps_post = dispersion(proto.post, k);
  const double two_dtheta = 2.0 * delta_theta(proto.pre, proto.post, k);
  m.cos_2dtheta = std::cos(two_dtheta);
  m.sin_2dtheta = std::sin(two_dtheta);
  m.weights = boltzmann_weights(proto.init.beta, m.eps_pre);

  const double cos2 = 0.5 * (1.0 + m.cos_2dtheta);  // cos^2(dtheta)
  const double sin2 = 0.5 * (1.0 - m.cos_2dtheta);  // sin^2(dtheta)
  const double coherence = m.weights.inv_z * m.sin_2dtheta * std::sin(proto.init.phi);
  m.p_plus = m.weights.plus * cos2 + m.weights.minus * sin2 + coherence;
  m.p_minus = m.weights.plus * sin2 + m.weights.minus * cos2 - coherence;
  m.echo_coefficient = m.cos_2dtheta * m.weights.tanh_beta_eps - 2.0 * coherence;
  return m;
}

std::complex<double> mode_amplitude(const QuenchMode& mode, double t) {
  const double phase = mode.eps_post * t;
  return {std::cos(phase), std::sin(phase) * mode.echo_coefficient};
}

std::complex<double> mode_amplitude(const QuenchProtocol& proto, double k, double t) {
  return mode_amplitude(quench_mode(proto, k), t);
}

double log_mode_modulus(const QuenchMode& mode, double t) {
  const double norm = std::norm(mode_amplitude(mode, t));
  return 0.5 * std::log(std::max(norm, 1e-300));
}

std::vector<double> uniform_times(double t_min, double t_max, std::size_t count) {
  std::vector<double> ts(count);
  if (count == 1) {
    ts[0] = t_min;
    return ts;
  }
  const double step = (t_max - t_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) ts[i] = t_min + step * static_cast<double>(i);
  return ts;
}

namespace {

void check_times(std::span<const double> times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "times must be finite and >= 0");
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "times must be strictly increasing");
    }
  }
}

}  // namespace

RateTrace rate_finite(const QuenchProtocol& proto, std::span<const double> times,
                      unsigned workers) {
  proto.validate();
  if (!proto.sites) {
    throw Error(ErrorCode::InvalidArgument, "rate_finite needs a finite chain length");
  }
  check_times(times);
  const MomentumGrid grid(*proto.sites);
  std::vector<QuenchMode> modes;
  modes.reserve(grid.size());
  for (double k : grid.momenta()) modes.push_back(quench_mode(proto, k));

  RateTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.values.resize(times.size());
  const double scale = 2.0 / static_cast<double>(*proto.sites);
  parallel_for(times.size(), workers, [&](std::size_t i) {
    double sum = 0.0;
    for (const QuenchMode& m : modes) {
      const double norm = std::norm(mode_amplitude(m, times[i]));
      if (norm <= 0.0) {
        sum = -std::numeric_limits<double>::infinity();
        break;
      }
      sum += 0.5 * std::log(norm);
    }
    trace.values[i] = -scale * sum;
  });
  return trace;
}

double rate_integral_at(const QuenchProtocol& proto, double t, const QuadratureOptions& options) {
  QuadratureOptions scaled = options;
  scaled.abs_tol = options.abs_tol * std::numbers::pi;  // tolerance is on r(t)
  const auto integrand = [&](double k) { return log_mode_modulus(quench_mode(proto, k), t); };
  try {
    const QuadratureResult q = integrate(integrand, 0.0, std::numbers::pi, scaled);
    return -q.value / std::numbers::pi;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::QuadratureNonConvergence) {
      throw Error(e.code(), std::string(e.what()) + " at t=" + std::to_string(t));
    }
    throw;
  }
}

RateTrace rate_integral(const QuenchProtocol& proto, std::span<const double> times,
                        unsigned workers, const QuadratureOptions& options) {
  proto.validate();
  check_times(times);
  RateTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.values.resize(times.size());
  parallel_for(times.size(), workers,
               [&](std::size_t i) { trace.values[i] = rate_integral_at(proto, times[i], options); });
  return trace;
}

}  // namespace xydqpt
