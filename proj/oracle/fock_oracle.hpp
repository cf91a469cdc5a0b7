#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace xydqpt::oracle {

using cplx = std::complex<double>;

// Dense 2^N construction of the coherent Gibbs product state. Site j is bit j;
// a set bit is an occupied fermion (spin up). Fermions carry the usual
// Jordan-Wigner string over lower sites; momentum modes use
// c_k = N^{-1/2} sum_j e^{ikj} c_j. Intended for N <= 10.
class FockOracle {
 public:
  struct Couplings {
    double gamma;
    double lambda;
  };

  FockOracle(int sites, Couplings couplings, double beta, double phi);

  int sites() const { return sites_; }
  const Eigen::VectorXcd& state() const { return psi_; }
  std::vector<double> positive_momenta() const;

  // Expectation values for the pair (k, -k), k > 0 from the grid.
  cplx cdag_cdag(double k) const;  // <c_k^+ c_{-k}^+>
  cplx cdag_c(double k) const;     // <c_k^+ c_k>
  cplx c_c(double k) const;        // <c_{-k} c_k>
  cplx c_cdag(double k) const;     // <c_{-k} c_{-k}^+>

  // A_j = c_j^+ + c_j, B_j = c_j^+ - c_j.
  cplx aa(int i, int j) const;
  cplx bb(int i, int j) const;
  cplx ba(int i, int j) const;

  cplx sigma_xx(int i, int j) const;
  cplx sigma_yy(int i, int j) const;
  cplx sigma_z(int i) const;

  // <psi| H_spin |psi> for the chain with the closed (periodic spin) bond.
  cplx spin_energy() const;
  // ||H_spin psi - e psi|| for e = <H_spin>; zero when psi is an eigenstate.
  double eigen_residual() const;

 private:
  Eigen::MatrixXcd site_annihilator(int j) const;
  Eigen::MatrixXcd momentum_annihilator(double k) const;
  Eigen::MatrixXcd spin_hamiltonian() const;
  cplx expect(const Eigen::MatrixXcd& op) const;

  int sites_;
  Couplings couplings_;
  std::vector<Eigen::MatrixXcd> c_;  // c_j
  Eigen::VectorXcd psi_;
};

}  // namespace xydqpt::oracle
