#pragma once

#include <array>
#include <vector>

#include "xydqpt/loschmidt.hpp"

namespace xydqpt {

struct FisherSample {
  double k = 0.0;
  double re_z = 0.0;
  double im_z = 0.0;
  bool infinite_re = false;  // one population vanished; re_z is +-inf
  bool is_crossing = false;  // a critical momentum lies in this sample's cell
};

struct Crossing {
  double k_star = 0.0;
  double eps_post = 0.0;
  std::array<double, 3> t_c{};  // branches n = 0, 1, 2
};

struct FisherCurve {
  int branch = 0;
  std::vector<FisherSample> samples;
  std::vector<Crossing> crossings;
};

// z_n(k) = [ln(P+/P-) + i(2n+1)pi] / (2 eps'_k).
FisherSample fisher_zero(const QuenchProtocol& proto, int branch, double k);

// Sign-equivalent to g(k) = sinh(beta eps) cos(2 dtheta) - sin(phi) sin(2 dtheta);
// it is g / cosh(beta eps), which stays finite for any beta.
double crossing_function(const QuenchProtocol& proto, double k);

inline constexpr int kCrossingScanPoints = 2048;
inline constexpr double kCrossingTolerance = 1e-10;

// Roots of the crossing function in (0, pi), each with t_c for n = 0..2.
std::vector<Crossing> find_crossings(const QuenchProtocol& proto);

// t_c^{(n)} = (2n+1) pi / (2 eps'_{k*}).
double critical_time(double eps_post, int branch);

// All t_c^{(n)} <= t_max for one crossing.
std::vector<double> critical_times_up_to(const Crossing& crossing, double t_max);

FisherCurve fisher_curve(const QuenchProtocol& proto, int branch, int resolution);

enum class BetaStatus { Ok, AlwaysTransition, NoTransition, NonMonotone };
const char* to_string(BetaStatus status) noexcept;  // ok | always | never | nonmonotone

struct BetaBracket {
  double beta_lo = 1e-3;
  double beta_hi = 1e3;
  double tolerance = 1e-4;
  int prescan_points = 8;
};

struct CriticalBeta {
  BetaStatus status = BetaStatus::Ok;
  double beta_c = 0.0;  // meaningful for Ok only
};

// Boundary in beta of "the crossing function has a root in (0, pi)". The
// protocol's own beta is ignored.
CriticalBeta critical_beta(const QuenchProtocol& family, const BetaBracket& bracket = {});

bool has_crossing(const QuenchProtocol& proto);

}  // namespace xydqpt
