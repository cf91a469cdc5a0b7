#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace xydqpt::oracle {

// Single (k, -k) pair in the basis {|1> = c_k^+ c_{-k}^+ |0>, |0>}.
Eigen::Matrix2cd pair_hamiltonian(double gamma, double lambda, double k);

// Bloch vector (<sx>, <sy>, <sz>) of the +eps eigenvector found by Hermitian
// eigendecomposition; independent of any eigenvector phase convention.
Eigen::Vector3d upper_bloch_vector(double gamma, double lambda, double k);

// cos(2 dtheta) and sin(2 dtheta) between pre and post eigenbases, read off
// the two Bloch vectors.
std::pair<double, double> double_angle_difference(double gamma0, double lambda0, double gamma1,
                                                  double lambda1, double k);

// Populations of the post-quench eigenvectors (+eps', -eps') in the pair state.
std::pair<double, double> post_populations(double gamma0, double lambda0, double gamma1,
                                           double lambda1, double beta, double phi, double k);

// Printed eigenvectors for +eps (index 0) and -eps (index 1).
Eigen::Vector2cd pair_eigenvector(double gamma, double lambda, double k, int branch);

// Coherent Gibbs pair state built from the printed eigenvectors and plain
// exponential weights (keep beta * eps moderate).
Eigen::Vector2cd pair_state(double gamma, double lambda, double beta, double phi, double k);

// <psi| exp(-i h' t) |psi> with the exponential taken by Hermitian
// eigendecomposition.
std::complex<double> evolved_overlap(double gamma0, double lambda0, double gamma1, double lambda1,
                                     double beta, double phi, double k, double t);

}  // namespace xydqpt::oracle
