#include "mode_oracle.hpp"

#include <cmath>

namespace xydqpt::oracle {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

Eigen::Matrix2cd pair_hamiltonian(double gamma, double lambda, double k) {
  const double a = -lambda - std::cos(k);
  const double b = gamma * std::sin(k);
  Eigen::Matrix2cd h;
  h << a, kI * b, -kI * b, -a;
  return h;
}

Eigen::Vector3d upper_bloch_vector(double gamma, double lambda, double k) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(pair_hamiltonian(gamma, lambda, k));
  const Eigen::Vector2cd v = solver.eigenvectors().col(1);  // eigenvalues ascend
  const std::complex<double> c01 = std::conj(v(0)) * v(1);
  return {2.0 * c01.real(), 2.0 * c01.imag(), std::norm(v(0)) - std::norm(v(1))};
}

std::pair<double, double> double_angle_difference(double gamma0, double lambda0, double gamma1,
                                                  double lambda1, double k) {
  const Eigen::Vector3d n0 = upper_bloch_vector(gamma0, lambda0, k);
  const Eigen::Vector3d n1 = upper_bloch_vector(gamma1, lambda1, k);
  // Both vectors lie in the y-z plane; the rotation from n1 to n0 is about x.
  return {n0.dot(n1), n1.cross(n0).x()};
}

std::pair<double, double> post_populations(double gamma0, double lambda0, double gamma1,
                                           double lambda1, double beta, double phi, double k) {
  const Eigen::Vector2cd psi = pair_state(gamma0, lambda0, beta, phi, k);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(
      pair_hamiltonian(gamma1, lambda1, k));
  const double minus = std::norm(solver.eigenvectors().col(0).dot(psi));
  const double plus = std::norm(solver.eigenvectors().col(1).dot(psi));
  return {plus, minus};
}

Eigen::Vector2cd pair_eigenvector(double gamma, double lambda, double k, int branch) {
  const double re = -lambda - std::cos(k);
  const double im = gamma * std::sin(k);
  const double eps = std::hypot(re, im);
  const double theta = std::atan2(im, re - eps);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Vector2cd v;
  if (branch == 0) {
    v << -kI * s, c;
  } else {
    v << c, -kI * s;
  }
  return v;
}

Eigen::Vector2cd pair_state(double gamma, double lambda, double beta, double phi, double k) {
  const double eps = std::hypot(lambda + std::cos(k), gamma * std::sin(k));
  const double z = std::exp(-beta * eps) + std::exp(beta * eps);
  return std::sqrt(std::exp(-beta * eps) / z) * pair_eigenvector(gamma, lambda, k, 0) +
         std::sqrt(std::exp(beta * eps) / z) * std::exp(kI * phi) *
             pair_eigenvector(gamma, lambda, k, 1);
}

std::complex<double> evolved_overlap(double gamma0, double lambda0, double gamma1, double lambda1,
                                     double beta, double phi, double k, double t) {
  const Eigen::Vector2cd psi = pair_state(gamma0, lambda0, beta, phi, k);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(
      pair_hamiltonian(gamma1, lambda1, k));
  Eigen::Vector2cd phases;
  for (int i = 0; i < 2; ++i) phases(i) = std::exp(-kI * (solver.eigenvalues()(i) * t));
  const Eigen::Matrix2cd u =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return psi.dot(u * psi);
}

}  // namespace xydqpt::oracle
