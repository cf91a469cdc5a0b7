#include "pfaffian_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace xydqpt::oracle {

namespace {

std::complex<double> expand(const Eigen::MatrixXcd& a, const std::vector<int>& idx) {
  if (idx.empty()) return 1.0;
  std::complex<double> sum = 0.0;
  const int first = idx[0];
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t m = 1; m < idx.size(); ++m) {
      if (m != j) rest.push_back(idx[m]);
    }
    const double sign = j % 2 == 1 ? 1.0 : -1.0;
    sum += sign * a(first, idx[j]) * expand(a, rest);
  }
  return sum;
}

}  // namespace

std::complex<double> pfaffian_cofactor(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() > 10) {
    throw std::invalid_argument("cofactor Pfaffian needs an even square matrix of dim <= 10");
  }
  std::vector<int> idx(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return expand(a, idx);
}

std::complex<double> determinant(const Eigen::MatrixXcd& a) { return a.partialPivLu().determinant(); }

}  // namespace xydqpt::oracle
