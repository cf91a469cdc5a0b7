#pragma once

#include <functional>

namespace xydqpt {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  // Panels narrower than this are accepted with a midpoint estimate; used for
  // integrable log singularities at isolated points.
  double min_width = 1e-6;
  int max_panels = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
  int singular_panels = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) integration on [a, b].
// Throws Error(QuadratureNonConvergence) when max_panels is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace xydqpt
