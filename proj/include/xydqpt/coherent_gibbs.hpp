#pragma once

#include <complex>

#include "xydqpt/spectrum.hpp"

namespace xydqpt {

using complex = std::complex<double>;

// Controls of the coherent Gibbs initial state: effective inverse temperature
// and the relative phase attached to every |eps_k^-> component.
struct InitialState {
  double beta = 0.0;
  double phi = 0.0;

  void validate() const;

  friend bool operator==(const InitialState&, const InitialState&) = default;
};

// Beyond this beta*eps the Boltzmann ratios are evaluated in log space.
inline constexpr double kLogSpaceThreshold = 350.0;

// Thermal weights of one mode, evaluated without overflow for any beta*eps >= 0.
struct BoltzmannWeights {
  double plus = 0.5;       // e^{-beta eps} / Z_k
  double minus = 0.5;      // e^{+beta eps} / Z_k
  double inv_z = 0.5;      // 1 / Z_k
  double tanh_beta_eps = 0.0;
  double z = 2.0;          // Z_k = 2 cosh(beta eps), +inf once it overflows
};

BoltzmannWeights boltzmann_weights(double beta, double eps);

struct ModeState {
  double a_plus = 0.0;       // amplitude on |eps_k^+>
  double a_minus_mag = 0.0;  // magnitude of the amplitude on |eps_k^->
  double phi = 0.0;          // phase carried by the |eps_k^-> amplitude
  double z_k = 2.0;
};

ModeState mode_state(const ModelParams& params, const InitialState& init, double k);

// <c_k^+ c_{-k}^+>, <c_k^+ c_k>, <c_{-k} c_k>, <c_{-k} c_{-k}^+> in the
// coherent Gibbs state; eps and theta are those of `params` (pre-quench).
struct FermionTwoPoint {
  complex cdag_cdag;
  complex cdag_c;
  complex c_c;
  complex c_cdag;
};

FermionTwoPoint two_point(const ModelParams& params, const InitialState& init, double k);

// Amplitudes of the pair state on the occupation basis: u on |0>, v on
// |1> = c_k^+ c_{-k}^+ |0>.
struct PairAmplitudes {
  complex u;
  complex v;
};

PairAmplitudes pair_amplitudes(const ModelParams& params, const InitialState& init, double k);

}  // namespace xydqpt
