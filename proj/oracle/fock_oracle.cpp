#include "fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xydqpt::oracle {

namespace {

constexpr cplx kI{0.0, 1.0};

Eigen::MatrixXcd lowering(int sites, int j) {
  const int dim = 1 << sites;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    if (s & (1 << j)) a(s ^ (1 << j), s) = 1.0;
  }
  return a;
}

Eigen::MatrixXcd parity_below(int sites, int j) {
  const int dim = 1 << sites;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    int ones = 0;
    for (int m = 0; m < j; ++m) ones += (s >> m) & 1;
    p(s, s) = ones % 2 == 0 ? 1.0 : -1.0;
  }
  return p;
}

}  // namespace

FockOracle::FockOracle(int sites, Couplings couplings, double beta, double phi)
    : sites_(sites), couplings_(couplings) {
  if (sites < 2 || sites > 10 || sites % 2 != 0) {
    throw std::invalid_argument("Fock oracle needs an even site count in [2, 10]");
  }
  for (int j = 0; j < sites; ++j) c_.push_back(parity_below(sites, j) * lowering(sites, j));

  const int dim = 1 << sites;
  psi_ = Eigen::VectorXcd::Zero(dim);
  psi_(0) = 1.0;
  const double g = couplings.gamma;
  const double l = couplings.lambda;
  for (double k : positive_momenta()) {
    const double eps = std::sqrt((l + std::cos(k)) * (l + std::cos(k)) +
                                 g * g * std::sin(k) * std::sin(k));
    const double theta = std::atan2(g * std::sin(k), -l - std::cos(k) - eps);
    const double z = 2.0 * std::cosh(beta * eps);
    const double a_plus = std::sqrt(std::exp(-beta * eps) / z);
    const double a_minus = std::sqrt(std::exp(beta * eps) / z);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // |e+> = -i s|1> + c|0>, |e-> = c|1> - i s|0>, |1> = c_k^+ c_{-k}^+ |0>
    const cplx w = a_minus * std::exp(kI * phi);
    const cplx on_one = a_plus * (-kI * s) + w * c;
    const cplx on_zero = a_plus * c + w * (-kI * s);
    const Eigen::MatrixXcd pair =
        momentum_annihilator(k).adjoint() * momentum_annihilator(-k).adjoint();
    psi_ = (on_zero * psi_ + on_one * (pair * psi_)).eval();
  }
  psi_.normalize();
}

std::vector<double> FockOracle::positive_momenta() const {
  std::vector<double> ks;
  for (int n = 1; n <= sites_ / 2; ++n) ks.push_back((2.0 * n - 1.0) * std::numbers::pi / sites_);
  return ks;
}

Eigen::MatrixXcd FockOracle::site_annihilator(int j) const {
  return c_[static_cast<std::size_t>(((j % sites_) + sites_) % sites_)];
}

Eigen::MatrixXcd FockOracle::momentum_annihilator(double k) const {
  const int dim = 1 << sites_;
  Eigen::MatrixXcd ck = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < sites_; ++j) ck += std::exp(kI * (k * j)) * c_[static_cast<std::size_t>(j)];
  return ck / std::sqrt(static_cast<double>(sites_));
}

cplx FockOracle::expect(const Eigen::MatrixXcd& op) const { return psi_.dot(op * psi_); }

cplx FockOracle::cdag_cdag(double k) const {
  return expect(momentum_annihilator(k).adjoint() * momentum_annihilator(-k).adjoint());
}
cplx FockOracle::cdag_c(double k) const {
  const Eigen::MatrixXcd ck = momentum_annihilator(k);
  return expect(ck.adjoint() * ck);
}
cplx FockOracle::c_c(double k) const {
  return expect(momentum_annihilator(-k) * momentum_annihilator(k));
}
cplx FockOracle::c_cdag(double k) const {
  const Eigen::MatrixXcd cmk = momentum_annihilator(-k);
  return expect(cmk * cmk.adjoint());
}

cplx FockOracle::aa(int i, int j) const {
  const Eigen::MatrixXcd ai = site_annihilator(i).adjoint() + site_annihilator(i);
  const Eigen::MatrixXcd aj = site_annihilator(j).adjoint() + site_annihilator(j);
  return expect(ai * aj);
}
cplx FockOracle::bb(int i, int j) const {
  const Eigen::MatrixXcd bi = site_annihilator(i).adjoint() - site_annihilator(i);
  const Eigen::MatrixXcd bj = site_annihilator(j).adjoint() - site_annihilator(j);
  return expect(bi * bj);
}
cplx FockOracle::ba(int i, int j) const {
  const Eigen::MatrixXcd bi = site_annihilator(i).adjoint() - site_annihilator(i);
  const Eigen::MatrixXcd aj = site_annihilator(j).adjoint() + site_annihilator(j);
  return expect(bi * aj);
}

cplx FockOracle::sigma_xx(int i, int j) const {
  const Eigen::MatrixXcd xi = lowering(sites_, i) + lowering(sites_, i).adjoint();
  const Eigen::MatrixXcd xj = lowering(sites_, j) + lowering(sites_, j).adjoint();
  return expect(xi * xj);
}
cplx FockOracle::sigma_yy(int i, int j) const {
  const Eigen::MatrixXcd yi = -kI * (lowering(sites_, i).adjoint() - lowering(sites_, i));
  const Eigen::MatrixXcd yj = -kI * (lowering(sites_, j).adjoint() - lowering(sites_, j));
  return expect(yi * yj);
}
cplx FockOracle::sigma_z(int i) const {
  const Eigen::MatrixXcd a = lowering(sites_, i);
  return expect(2.0 * a.adjoint() * a - Eigen::MatrixXcd::Identity(a.rows(), a.cols()));
}

Eigen::MatrixXcd FockOracle::spin_hamiltonian() const {
  const int dim = 1 << sites_;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const double g = couplings_.gamma;
  for (int j = 0; j < sites_; ++j) {
    const int n = (j + 1) % sites_;
    const Eigen::MatrixXcd aj = lowering(sites_, j);
    const Eigen::MatrixXcd an = lowering(sites_, n);
    const Eigen::MatrixXcd xj = aj + aj.adjoint();
    const Eigen::MatrixXcd xn = an + an.adjoint();
    const Eigen::MatrixXcd yj = -kI * (aj.adjoint() - aj);
    const Eigen::MatrixXcd yn = -kI * (an.adjoint() - an);
    const Eigen::MatrixXcd zj = 2.0 * aj.adjoint() * aj - Eigen::MatrixXcd::Identity(dim, dim);
    h -= 0.5 * (0.5 * (1.0 + g) * xj * xn + 0.5 * (1.0 - g) * yj * yn + couplings_.lambda * zj);
  }
  return h;
}

cplx FockOracle::spin_energy() const { return expect(spin_hamiltonian()); }

double FockOracle::eigen_residual() const {
  const Eigen::MatrixXcd h = spin_hamiltonian();
  const cplx e = psi_.dot(h * psi_);
  return (h * psi_ - e * psi_).norm();
}

}  // namespace xydqpt::oracle
