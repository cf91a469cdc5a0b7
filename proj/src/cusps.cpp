#include <algorithm>
#include <cmath>
#include <vector>

#include "xydqpt/loschmidt.hpp"

namespace xydqpt {
namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  double m = *mid;
  if (v.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(v.begin(), mid));
  }
  return m;
}

std::vector<double> second_differences(const std::vector<double>& values) {
  std::vector<double> d(values.size(), 0.0);
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double v = values[i + 1] - 2.0 * values[i] + values[i - 1];
    d[i] = std::isnan(v) ? INFINITY : std::abs(v);
  }
  return d;
}

struct Peak {
  double time;
  double height;
};

// Peak second difference of `f` sampled with step h on [lo, hi].
Peak sample_peak(const std::function<double(double)>& f, double lo, double hi, double h) {
  const auto n = static_cast<std::size_t>(std::llround((hi - lo) / h)) + 1;
  std::vector<double> vals(n);
  for (std::size_t j = 0; j < n; ++j) vals[j] = f(lo + h * static_cast<double>(j));
  const std::vector<double> d = second_differences(vals);
  std::size_t best = 1;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (d[j] > d[best]) best = j;
  }
  return Peak{lo + h * static_cast<double>(best), d[best]};
}

}  // namespace

std::vector<double> detect_cusps(const RateTrace& trace,
                                 const std::function<double(double)>& resample,
                                 const CuspOptions& options) {
  const std::vector<double>& t = trace.times;
  const std::size_t n = t.size();
  std::vector<double> cusps;
  if (n < 5 || trace.values.size() != n) return cusps;

  const std::vector<double> d = second_differences(trace.values);
  const std::vector<double> interior(d.begin() + 1, d.end() - 1);
  const double med = median(interior);
  std::vector<double> dev(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) dev[i] = std::abs(interior[i] - med);
  const double threshold = med + options.mad_factor * median(dev);

  const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(d[i] > threshold) || d[i] <= 0.0) continue;
    if (d[i] < d[i - 1] || d[i] < d[i + 1]) continue;
    if (i > 1 && d[i] == d[i - 1]) continue;  // plateau: keep its first point

    if (!resample) {
      cusps.push_back(t[i]);
      continue;
    }

    double center = t[i];
    double step = h;
    double height = d[i];
    bool kink = true;
    for (int round = 0; round < options.refine_rounds; ++round) {
      const double fine = step / options.refine_factor;
      const double lo = std::max(t.front(), center - 2.0 * step);
      const double hi = std::min(t.back(), center + 2.0 * step);
      if (hi - lo < 3.0 * fine) break;
      const Peak p = sample_peak(resample, lo, hi, fine);
      if (std::isfinite(height) && std::isfinite(p.height) &&
          p.height < options.min_kink_ratio * height) {
        kink = false;
        break;
      }
      center = p.time;
      height = p.height;
      step = fine;
    }
    if (!kink) continue;
    if (!cusps.empty() && std::abs(center - cusps.back()) < 2.0 * h) continue;
    cusps.push_back(center);
  }
  return cusps;
}

}  // namespace xydqpt
