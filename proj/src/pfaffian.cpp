#include "xydqpt/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xydqpt/errors.hpp"

namespace xydqpt {

double SkewMatrix::skew_defect() const {
  double defect = 0.0;
  double scale = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      scale = std::max(scale, std::abs((*this)(r, c)));
      defect = std::max(defect, std::abs((*this)(r, c) + (*this)(c, r)));
    }
  }
  return scale > 0.0 ? defect / scale : defect;
}

void SkewMatrix::validate() const {
  if (dim_ == 0 || dim_ % 2 != 0) {
    throw Error(ErrorCode::NotSkew, "Pfaffian needs an even, non-zero dimension");
  }
  if (skew_defect() > 1e-12) {
    throw Error(ErrorCode::NotSkew, "matrix is not skew-symmetric");
  }
}

namespace {

// Reduces `a` in place. Calls on_pivot(p) for every 2x2 pivot entry p and
// returns the sign from row/column interchanges; returns 0 on a zero pivot.
template <typename OnPivot>
int eliminate(SkewMatrix& a, OnPivot&& on_pivot) {
  using cplx = std::complex<double>;
  const std::size_t n = a.dim();
  int sign = 1;
  std::vector<cplx> tau(n);
  std::vector<cplx> col(n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // Largest entry in column k below the diagonal becomes the (k+1, k) pivot.
    std::size_t piv = k + 1;
    double best = std::abs(a(k + 1, k));
    for (std::size_t i = k + 2; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k + 1, c), a(piv, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, piv));
      sign = -sign;
    }
    const cplx pivot = a(k, k + 1);
    if (pivot == cplx(0.0, 0.0)) return 0;
    on_pivot(pivot);
    if (k + 2 >= n) break;

    // Congruence with a unit lower-triangular Gauss transform:
    // A[i,j] += tau_i A[k+1,j] - A[i,k+1] tau_j  for i, j >= k+2.
    for (std::size_t i = k + 2; i < n; ++i) {
      tau[i] = a(k, i) / pivot;
      col[i] = a(i, k + 1);
    }
    // Plain real arithmetic: std::complex multiplication goes through the
    // inf/nan-checked library routine and dominates the runtime otherwise.
    const double* tv = reinterpret_cast<const double*>(tau.data());
    const double* cv = reinterpret_cast<const double*>(col.data());
    for (std::size_t i = k + 2; i < n; ++i) {
      const double tr = tv[2 * i], ti = tv[2 * i + 1];
      const double cr = cv[2 * i], ci = cv[2 * i + 1];
      double* row = reinterpret_cast<double*>(&a(i, 0));
      for (std::size_t j = k + 2; j < n; ++j) {
        const double xr = cv[2 * j], xi = cv[2 * j + 1];
        const double yr = tv[2 * j], yi = tv[2 * j + 1];
        row[2 * j] += (tr * xr - ti * xi) - (cr * yr - ci * yi);
        row[2 * j + 1] += (tr * xi + ti * xr) - (cr * yi + ci * yr);
      }
    }
  }
  return sign;
}

}  // namespace

std::complex<double> pfaffian(SkewMatrix a) {
  a.validate();
  std::complex<double> product{1.0, 0.0};
  const int sign = eliminate(a, [&](std::complex<double> p) { product *= p; });
  if (sign == 0) return {0.0, 0.0};
  return static_cast<double>(sign) * product;
}

std::complex<double> LogPfaffian::value() const {
  if (log_abs == -std::numeric_limits<double>::infinity()) return {0.0, 0.0};
  return std::exp(log_abs) * phase;
}

LogPfaffian log_pfaffian(SkewMatrix a) {
  a.validate();
  LogPfaffian out;
  const int sign = eliminate(a, [&](std::complex<double> p) {
    const double m = std::abs(p);
    out.log_abs += std::log(m);
    out.phase *= p / m;
  });
  if (sign == 0) {
    out.log_abs = -std::numeric_limits<double>::infinity();
    out.phase = {0.0, 0.0};
    return out;
  }
  out.phase *= static_cast<double>(sign);
  return out;
}

}  // namespace xydqpt
