#pragma once

#include <complex>
#include <vector>

#include "xydqpt/coherent_gibbs.hpp"
#include "xydqpt/pfaffian.hpp"
#include "xydqpt/spectrum.hpp"

namespace xydqpt {

// Wick contractions of the Majorana-like operators A_j = c_j^+ + c_j and
// B_j = c_j^+ - c_j at separation r:
//   Q_r = <A_i A_{i+r}>, S_r = <B_i B_{i+r}>, G_r = <B_i A_{i+r}>, D_r = -G_{-r}.
// Q and S carry sin(kr) kernels, so Q_0 = S_0 = 0 (same-site AA/BB pairs
// never occur inside a string).
class ContractionTable {
 public:
  ContractionTable(int sites, int r_max);

  int sites() const noexcept { return sites_; }
  int r_max() const noexcept { return r_max_; }

  std::complex<double> q(int r) const;  // r in [-r_max, r_max]
  std::complex<double> s(int r) const;
  std::complex<double> g(int r) const;
  std::complex<double> d(int r) const { return -g(-r); }

 private:
  friend ContractionTable contractions(const ModelParams&, const InitialState&, int, int);
  std::size_t index(int r) const;

  int sites_;
  int r_max_;
  std::vector<std::complex<double>> q_;  // r >= 0
  std::vector<std::complex<double>> s_;  // r >= 0
  std::vector<std::complex<double>> g_;  // r in [-r_max, r_max]
};

ContractionTable contractions(const ModelParams& params, const InitialState& init, int sites,
                              int r_max);

enum class Direction { X, Y };

// The 2r x 2r matrix of pairwise contractions of the string operators
// (B_i A_{i+1} B_{i+1} ... A_{i+r} for x, A_i B_{i+1} A_{i+1} ... B_{i+r} for y).
// Throws Error(PatternMismatch) when its first two rows differ from the
// closed-form template rows.
SkewMatrix string_matrix(const ContractionTable& table, Direction direction, int r);

// C_x(r) = Pf M_x, C_y(r) = (-1)^r Pf M_y. Complex; the imaginary part is a
// consistency residue.
std::complex<double> correlator(const ContractionTable& table, Direction direction, int r);
inline std::complex<double> correlator_x(const ContractionTable& t, int r) {
  return correlator(t, Direction::X, r);
}
inline std::complex<double> correlator_y(const ContractionTable& t, int r) {
  return correlator(t, Direction::Y, r);
}

// M_z = (2/N) sum over all N momenta of <c_k^+ c_k>, minus 1.
double m_z(const ModelParams& params, const InitialState& init, int sites);

struct OrderParameterOptions {
  double tol = 1e-6;
  int r_start = 8;
  int r_cap = 256;
  int sites_per_distance = 8;  // contraction sums use N = sites_per_distance * r
};

struct OrderParameter {
  double value = 0.0;  // sqrt(max(limit, 0))
  double limit = 0.0;  // accepted estimate of lim C(r)
  int r_used = 0;
  bool converged = false;
  bool negative_limit = false;  // limit < -10 tol
};

OrderParameter order_parameter(const ModelParams& params, const InitialState& init,
                               Direction direction, const OrderParameterOptions& options = {});

struct MagnetizationPoint {
  double mx = 0.0;
  double my = 0.0;
  double mz = 0.0;
  int r_used = 0;
  bool converged = false;
};

MagnetizationPoint magnetization(const ModelParams& params, const InitialState& init,
                                 const OrderParameterOptions& options = {}, int mz_sites = 4096);

}  // namespace xydqpt
