#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace xydqpt {

// Dense row-major complex matrix with A = -A^T.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  // Sets (r, c) and its mirror (c, r) = -value.
  void set_upper(std::size_t r, std::size_t c, std::complex<double> value) {
    (*this)(r, c) = value;
    (*this)(c, r) = -value;
  }

  // max |A + A^T| / max |A|; 0 for an exactly skew matrix.
  double skew_defect() const;

  // Throws Error(NotSkew) for odd dimension or skew_defect() > 1e-12.
  void validate() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::complex<double>> data_;
};

// Pfaffian by skew-symmetric Gaussian elimination (Parlett-Reid) with
// symmetric partial pivoting. Exact zero pivots give Pf = 0.
std::complex<double> pfaffian(SkewMatrix a);

// Same elimination, accumulating log|Pf| and the phase separately so
// magnitudes far below DBL_MIN survive. log_abs = -inf for a singular matrix.
struct LogPfaffian {
  double log_abs = 0.0;
  std::complex<double> phase{1.0, 0.0};

  std::complex<double> value() const;
};

LogPfaffian log_pfaffian(SkewMatrix a);

}  // namespace xydqpt
