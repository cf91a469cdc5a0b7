#include "xydqpt/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xydqpt/errors.hpp"

namespace xydqpt {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NonMonotoneBracket: return "NonMonotoneBracket";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NegativeLimit: return "NegativeLimit";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateAngle:
    case ErrorCode::QuadratureNonConvergence:
    case ErrorCode::NotSkew:
    case ErrorCode::NonMonotoneBracket:
    case ErrorCode::PatternMismatch:
    case ErrorCode::NegativeLimit:
      return true;
    default:
      return false;
  }
}

void ModelParams::validate() const {
  if (!std::isfinite(gamma) || std::abs(gamma) > 1.0) {
    throw Error(ErrorCode::InvalidArgument,
                "gamma must lie in [-1, 1], got " + std::to_string(gamma));
  }
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "lambda must be finite and >= 0, got " + std::to_string(lambda));
  }
}

MomentumGrid::MomentumGrid(int sites) : sites_(sites) {
  if (sites <= 0 || sites % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "chain length must be even and positive, got " + std::to_string(sites));
  }
  ks_.reserve(static_cast<std::size_t>(sites / 2));
  for (int n = 1; n <= sites / 2; ++n) {
    ks_.push_back((2.0 * n - 1.0) * std::numbers::pi / sites);
  }
}

double dispersion(const ModelParams& params, double k) {
  return std::hypot(params.lambda + std::cos(k), params.gamma * std::sin(k));
}

double bogoliubov_angle(const ModelParams& params, double k) {
  const double a = -params.lambda - std::cos(k);
  const double b = params.gamma * std::sin(k);
  const double eps = std::hypot(a, b);
  if (eps < kDegenerateTolerance) {
    throw Error(ErrorCode::DegenerateAngle,
                "Bogoliubov angle undefined at gap closing (gamma=" +
                    std::to_string(params.gamma) + ", lambda=" +
                    std::to_string(params.lambda) + ", k=" + std::to_string(k) + ")");
  }
  // a - eps loses all digits when a > 0 and |b| << a; use the conjugate form.
  const double re = a > 0.0 ? -(b * b) / (a + eps) : a - eps;
  if (re == 0.0 && b == 0.0) {
    // b -> 0 limit with a > 0: eigenvector |eps+> = |1>, i.e. theta = pi/2 (mod pi).
    return std::numbers::pi / 2.0;
  }
  return std::atan2(b, re);
}

double wrap_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(angle, two_pi);  // [-pi, pi]
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

double delta_theta(const ModelParams& pre, const ModelParams& post, double k) {
  return wrap_angle(bogoliubov_angle(pre, k) - bogoliubov_angle(post, k));
}

ModeData mode_data(const ModelParams& params, double k) {
  return ModeData{k, dispersion(params, k), bogoliubov_angle(params, k), 0.0};
}

ModeData mode_data(const ModelParams& pre, const ModelParams& post, double k) {
  ModeData m = mode_data(pre, k);
  m.delta_theta = wrap_angle(m.theta - bogoliubov_angle(post, k));
  return m;
}

}  // namespace xydqpt
