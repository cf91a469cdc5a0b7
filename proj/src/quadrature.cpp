#include "xydqpt/quadrature.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <string>
#include <vector>

#include "xydqpt/errors.hpp"

namespace xydqpt {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss points.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  double err = std::abs(kronrod - gauss);
  if (!std::isfinite(kronrod)) err = INFINITY;
  return Panel{a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  std::vector<Panel> heap;  // max-heap on error
  QuadratureResult result;
  double accepted_value = 0.0;

  const auto total_open_error = [&heap] {
    double e = 0.0;
    for (const Panel& p : heap) e += p.error;
    return e;
  };

  heap.push_back(gauss_kronrod(f, a, b));
  result.panels = 1;
  double open_error = heap.front().error;

  while (!heap.empty()) {
    if (!std::isfinite(open_error)) open_error = total_open_error();
    if (open_error <= options.abs_tol) break;
    if (result.panels >= options.max_panels) {
      throw Error(ErrorCode::QuadratureNonConvergence,
                  "adaptive quadrature exhausted " + std::to_string(options.max_panels) +
                      " panels, error estimate " + std::to_string(open_error));
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    open_error -= worst.error;
    const double width = worst.b - worst.a;
    const double mid = 0.5 * (worst.a + worst.b);
    if (width < options.min_width) {
      // Singular panel: midpoint estimate, accepted as resolved.
      const double fm = f(mid);
      accepted_value += std::isfinite(fm) ? fm * width : 0.0;
      ++result.singular_panels;
      continue;
    }
    for (const Panel& half : {gauss_kronrod(f, worst.a, mid), gauss_kronrod(f, mid, worst.b)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end());
      open_error += half.error;
    }
    ++result.panels;
  }

  // Sum in interval order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  double value = accepted_value;
  for (const Panel& p : heap) value += p.value;
  result.value = value;
  result.error = total_open_error();
  return result;
}

}  // namespace xydqpt
