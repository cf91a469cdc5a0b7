#include "xydqpt/coherent_gibbs.hpp"

#include <cmath>
#include <string>

#include "xydqpt/errors.hpp"

namespace xydqpt {

void InitialState::validate() const {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "beta must be finite and >= 0, got " + std::to_string(beta));
  }
  if (!std::isfinite(phi)) {
    throw Error(ErrorCode::InvalidArgument, "phi must be finite");
  }
}

BoltzmannWeights boltzmann_weights(double beta, double eps) {
  const double x = beta * eps;
  BoltzmannWeights w;
  w.tanh_beta_eps = std::tanh(x);
  const double e2 = std::exp(-2.0 * x);  // <= 1, underflows gracefully
  if (x > kLogSpaceThreshold) {
    const double log_norm = std::log1p(e2);
    w.plus = std::exp(-2.0 * x - log_norm);
    w.minus = std::exp(-log_norm);
    w.inv_z = std::exp(-x - log_norm);
    w.z = std::exp(x + log_norm);
  } else {
    w.plus = e2 / (1.0 + e2);
    w.minus = 1.0 / (1.0 + e2);
    w.inv_z = std::exp(-x) / (1.0 + e2);
    w.z = 2.0 * std::cosh(x);
  }
  return w;
}

ModeState mode_state(const ModelParams& params, const InitialState& init, double k) {
  const double eps = dispersion(params, k);
  const BoltzmannWeights w = boltzmann_weights(init.beta, eps);
  return ModeState{std::sqrt(w.plus), std::sqrt(w.minus), init.phi, w.z};
}

FermionTwoPoint two_point(const ModelParams& params, const InitialState& init, double k) {
  const double eps = dispersion(params, k);
  const double theta = bogoliubov_angle(params, k);
  const BoltzmannWeights w = boltzmann_weights(init.beta, eps);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double sc = s * c;
  const double s2 = s * s;
  const double c2 = c * c;
  const complex i{0.0, 1.0};
  const complex e_phi = std::polar(1.0, init.phi);
  const complex e_mphi = std::conj(e_phi);

  // Each line is the closed form divided through by Z_k.
  FermionTwoPoint tp;
  tp.cdag_cdag = i * (w.plus - w.minus) * sc + w.inv_z * (e_phi * s2 + e_mphi * c2);
  tp.cdag_c = i * (e_phi - e_mphi) * (w.inv_z * sc) + w.minus * c2 + w.plus * s2;
  tp.c_c = i * (w.minus - w.plus) * sc + w.inv_z * (e_phi * c2 + e_mphi * s2);
  tp.c_cdag = i * (e_mphi - e_phi) * (w.inv_z * sc) + w.plus * c2 + w.minus * s2;
  return tp;
}

PairAmplitudes pair_amplitudes(const ModelParams& params, const InitialState& init, double k) {
  const ModeState st = mode_state(params, init, k);
  const double theta = bogoliubov_angle(params, k);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const complex i{0.0, 1.0};
  const complex minus_amp = st.a_minus_mag * std::polar(1.0, st.phi);
  // |eps+> = -i s|1> + c|0>,  |eps-> = c|1> - i s|0>
  return PairAmplitudes{st.a_plus * c - i * minus_amp * s, -i * st.a_plus * s + minus_amp * c};
}

}  // namespace xydqpt
