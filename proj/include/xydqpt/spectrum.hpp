#pragma once

#include <span>
#include <vector>

namespace xydqpt {

// Couplings of one XY-chain Hamiltonian instance, energies in units of J = 1.
struct ModelParams {
  double gamma = 0.0;   // anisotropy, |gamma| <= 1
  double lambda = 0.0;  // transverse field, >= 0

  // Throws Error(InvalidArgument) when the invariants do not hold.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Antiperiodic-sector momenta k_n = (2n - 1) pi / N, n = 1..N/2.
class MomentumGrid {
 public:
  explicit MomentumGrid(int sites);

  int sites() const noexcept { return sites_; }
  std::span<const double> momenta() const noexcept { return ks_; }
  std::size_t size() const noexcept { return ks_.size(); }
  double operator[](std::size_t i) const { return ks_[i]; }

 private:
  int sites_;
  std::vector<double> ks_;
};

// Per-momentum bundle of single-particle data.
struct ModeData {
  double k = 0.0;
  double eps = 0.0;
  double theta = 0.0;
  double delta_theta = 0.0;  // only meaningful when built for a quench pair
};

// Gap-closing threshold below which the Bogoliubov angle is 0/0.
inline constexpr double kDegenerateTolerance = 1e-12;

double dispersion(const ModelParams& params, double k);

// theta_k = arg[(-lambda - cos k - eps_k) + i gamma sin k] in (-pi, pi].
// Throws Error(DegenerateAngle) at gap closings.
double bogoliubov_angle(const ModelParams& params, double k);

// theta_k(pre) - theta_k(post) wrapped to (-pi, pi].
double delta_theta(const ModelParams& pre, const ModelParams& post, double k);

double wrap_angle(double angle);

ModeData mode_data(const ModelParams& params, double k);
ModeData mode_data(const ModelParams& pre, const ModelParams& post, double k);

}  // namespace xydqpt
