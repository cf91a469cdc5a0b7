#include "xydqpt/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xydqpt/errors.hpp"

namespace xydqpt {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double safe_crossing_function(const QuenchProtocol& proto, double k) {
  try {
    return crossing_function(proto, k);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateAngle) return kNaN;
    throw;
  }
}

double bisect_root(const QuenchProtocol& proto, double lo, double hi, double g_lo) {
  while (hi - lo > kCrossingTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = safe_crossing_function(proto, mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section search for the extremum of sign*g on [lo, hi]; returns the
// abscissa where sign*g is smallest.
double golden_extremum(const QuenchProtocol& proto, double lo, double hi, double sign) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = sign * safe_crossing_function(proto, x1);
  double f2 = sign * safe_crossing_function(proto, x2);
  for (int it = 0; it < 60 && hi - lo > kCrossingTolerance; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = sign * safe_crossing_function(proto, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = sign * safe_crossing_function(proto, x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

struct Scan {
  std::vector<double> k;
  std::vector<double> g;
};

Scan scan(const QuenchProtocol& proto) {
  Scan s;
  s.k.resize(kCrossingScanPoints);
  s.g.resize(kCrossingScanPoints);
  for (int i = 0; i < kCrossingScanPoints; ++i) {
    s.k[i] = (i + 0.5) * std::numbers::pi / kCrossingScanPoints;
    s.g[i] = safe_crossing_function(proto, s.k[i]);
  }
  return s;
}

// Root locations; stop_at_first skips the bisection work for existence checks.
std::vector<double> crossing_roots(const QuenchProtocol& proto, bool stop_at_first) {
  const Scan s = scan(proto);
  std::vector<double> roots;
  const std::size_t n = s.k.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double g0 = s.g[i];
    const double g1 = s.g[i + 1];
    if (std::isnan(g0) || std::isnan(g1)) continue;
    if (g0 == 0.0) {
      roots.push_back(s.k[i]);
    } else if ((g0 < 0.0) != (g1 < 0.0) && g1 != 0.0) {
      roots.push_back(stop_at_first ? s.k[i] : bisect_root(proto, s.k[i], s.k[i + 1], g0));
    }
    if (stop_at_first && !roots.empty()) return roots;
  }
  if (!std::isnan(s.g[n - 1]) && s.g[n - 1] == 0.0) roots.push_back(s.k[n - 1]);

  // Root pairs narrower than the scan spacing: refine local minima of |g|.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double gm = s.g[i - 1], g0 = s.g[i], gp = s.g[i + 1];
    if (std::isnan(gm) || std::isnan(g0) || std::isnan(gp) || g0 == 0.0) continue;
    if ((gm < 0.0) != (g0 < 0.0) || (gp < 0.0) != (g0 < 0.0)) continue;
    if (std::abs(g0) > std::abs(gm) || std::abs(g0) > std::abs(gp)) continue;
    const double sign = g0 > 0.0 ? 1.0 : -1.0;
    const double k_ext = golden_extremum(proto, s.k[i - 1], s.k[i + 1], sign);
    const double g_ext = safe_crossing_function(proto, k_ext);
    if (std::isnan(g_ext) || sign * g_ext > 0.0) continue;
    if (stop_at_first) return {k_ext};
    roots.push_back(bisect_root(proto, s.k[i - 1], k_ext, gm));
    roots.push_back(bisect_root(proto, k_ext, s.k[i + 1], g_ext));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

double crossing_function(const QuenchProtocol& proto, double k) {
  return quench_mode(proto, k).echo_coefficient;
}

FisherSample fisher_zero(const QuenchProtocol& proto, int branch, double k) {
  const QuenchMode m = quench_mode(proto, k);
  FisherSample s;
  s.k = k;
  s.im_z = (2.0 * branch + 1.0) * std::numbers::pi / (2.0 * m.eps_post);
  if (m.p_plus <= 0.0 || m.p_minus <= 0.0) {
    s.infinite_re = true;
    s.re_z = m.p_plus <= 0.0 ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
  } else {
    s.re_z = std::log(m.p_plus / m.p_minus) / (2.0 * m.eps_post);
  }
  return s;
}

double critical_time(double eps_post, int branch) {
  return (2.0 * branch + 1.0) * std::numbers::pi / (2.0 * eps_post);
}

std::vector<double> critical_times_up_to(const Crossing& crossing, double t_max) {
  std::vector<double> ts;
  for (int n = 0;; ++n) {
    const double t = critical_time(crossing.eps_post, n);
    if (t > t_max) break;
    ts.push_back(t);
  }
  return ts;
}

std::vector<Crossing> find_crossings(const QuenchProtocol& proto) {
  proto.validate();
  std::vector<Crossing> out;
  for (double k : crossing_roots(proto, false)) {
    Crossing c;
    c.k_star = k;
    c.eps_post = dispersion(proto.post, k);
    for (int n = 0; n < 3; ++n) c.t_c[n] = critical_time(c.eps_post, n);
    out.push_back(c);
  }
  return out;
}

bool has_crossing(const QuenchProtocol& proto) {
  proto.validate();
  return !crossing_roots(proto, true).empty();
}

FisherCurve fisher_curve(const QuenchProtocol& proto, int branch, int resolution) {
  if (resolution < 256) {
    throw Error(ErrorCode::InvalidArgument,
                "fisher curve resolution must be >= 256, got " + std::to_string(resolution));
  }
  FisherCurve curve;
  curve.branch = branch;
  curve.crossings = find_crossings(proto);
  const double dk = std::numbers::pi / resolution;
  curve.samples.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    curve.samples.push_back(fisher_zero(proto, branch, (i + 0.5) * dk));
  }
  for (const Crossing& c : curve.crossings) {
    const int cell = std::min(resolution - 1, static_cast<int>(c.k_star / dk));
    curve.samples[static_cast<std::size_t>(cell)].is_crossing = true;
  }
  return curve;
}

const char* to_string(BetaStatus status) noexcept {
  switch (status) {
    case BetaStatus::Ok: return "ok";
    case BetaStatus::AlwaysTransition: return "always";
    case BetaStatus::NoTransition: return "never";
    case BetaStatus::NonMonotone: return "nonmonotone";
  }
  return "unknown";
}

CriticalBeta critical_beta(const QuenchProtocol& family, const BetaBracket& bracket) {
  if (!(bracket.beta_lo > 0.0) || !(bracket.beta_hi > bracket.beta_lo) ||
      !std::isfinite(bracket.beta_hi) || !(bracket.tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "beta bracket needs 0 < beta_lo < beta_hi and tolerance > 0");
  }
  const auto crosses = [&](double beta) { return has_crossing(family.with_beta(beta)); };
  if (!crosses(bracket.beta_lo)) return {BetaStatus::NoTransition, bracket.beta_lo};
  if (crosses(bracket.beta_hi)) return {BetaStatus::AlwaysTransition, bracket.beta_hi};

  // Log-spaced pre-scan; crossing existence must switch off exactly once.
  const int m = std::max(bracket.prescan_points, 2);
  const double log_lo = std::log(bracket.beta_lo);
  const double log_hi = std::log(bracket.beta_hi);
  std::vector<double> betas(static_cast<std::size_t>(m));
  std::vector<bool> flags(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    betas[i] = i == 0 ? bracket.beta_lo
               : i == m - 1 ? bracket.beta_hi
                            : std::exp(log_lo + (log_hi - log_lo) * i / (m - 1));
    flags[i] = i == 0 ? true : i == m - 1 ? false : crosses(betas[i]);
  }
  int switch_index = -1;
  for (int i = 0; i + 1 < m; ++i) {
    if (flags[i] && !flags[i + 1]) {
      if (switch_index >= 0) return {BetaStatus::NonMonotone, 0.0};
      switch_index = i;
    } else if (!flags[i] && flags[i + 1]) {
      return {BetaStatus::NonMonotone, 0.0};
    }
  }

  double lo = betas[switch_index];
  double hi = betas[switch_index + 1];
  while (hi - lo > bracket.tolerance) {
    const double mid = 0.5 * (lo + hi);
    (crosses(mid) ? lo : hi) = mid;
  }
  return {BetaStatus::Ok, 0.5 * (lo + hi)};
}

}  // namespace xydqpt
