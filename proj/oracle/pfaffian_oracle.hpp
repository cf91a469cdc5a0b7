#pragma once

#include <complex>

#include <Eigen/Dense>

namespace xydqpt::oracle {

// Recursive expansion along the first row. Factorial cost; dim <= 10.
std::complex<double> pfaffian_cofactor(const Eigen::MatrixXcd& a);

// LU determinant.
std::complex<double> determinant(const Eigen::MatrixXcd& a);

}  // namespace xydqpt::oracle
