#include "xydqpt/xydqpt.h"

#include <algorithm>
#include <functional>
#include <span>
#include <exception>
#include <new>
#include <string>

#include "selftest.hpp"
#include "xydqpt/errors.hpp"
#include "xydqpt/fisher.hpp"
#include "xydqpt/magnetization.hpp"
#include "xydqpt/pfaffian.hpp"
#include "xydqpt/sweep.hpp"

#ifndef XYDQPT_CONFIG_DIR
#define XYDQPT_CONFIG_DIR "configs/figures"
#endif

struct xydqpt_protocol {
  xydqpt::QuenchProtocol proto;
};

struct xydqpt_sweep {
  xydqpt::SweepSpec spec;
};

namespace {

thread_local std::string last_error;

xydqpt_status status_of(xydqpt::ErrorCode code) {
  using xydqpt::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return XYDQPT_INVALID_ARGUMENT;
    case ErrorCode::DegenerateAngle: return XYDQPT_DEGENERATE_ANGLE;
    case ErrorCode::QuadratureNonConvergence: return XYDQPT_QUADRATURE_NONCONVERGENCE;
    case ErrorCode::NotSkew: return XYDQPT_NOT_SKEW;
    case ErrorCode::NonMonotoneBracket: return XYDQPT_NONMONOTONE_BRACKET;
    case ErrorCode::PatternMismatch: return XYDQPT_PATTERN_MISMATCH;
    case ErrorCode::NegativeLimit: return XYDQPT_NEGATIVE_LIMIT;
    case ErrorCode::Config: return XYDQPT_CONFIG;
    case ErrorCode::Io: return XYDQPT_IO;
  }
  return XYDQPT_INTERNAL;
}

xydqpt_status fail(xydqpt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
xydqpt_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const xydqpt::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(XYDQPT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(XYDQPT_INTERNAL, e.what());
  } catch (...) {
    return fail(XYDQPT_INTERNAL, "unknown exception");
  }
}

xydqpt_status null_argument(const char* name) {
  return fail(XYDQPT_INVALID_ARGUMENT, std::string("null pointer argument '") + name + "'");
}

void emit(xydqpt_line_fn on_line, void* user, const std::string& line) {
  if (on_line) on_line(line.c_str(), user);
}

}  // namespace

extern "C" {

const char* xydqpt_version(void) { return "0.1.0"; }

const char* xydqpt_last_error(void) { return last_error.c_str(); }

const char* xydqpt_status_name(xydqpt_status status) {
  switch (status) {
    case XYDQPT_OK: return "ok";
    case XYDQPT_INVALID_ARGUMENT: return "invalid-argument";
    case XYDQPT_DEGENERATE_ANGLE: return "degenerate-angle";
    case XYDQPT_QUADRATURE_NONCONVERGENCE: return "quadrature-nonconvergence";
    case XYDQPT_NOT_SKEW: return "not-skew";
    case XYDQPT_NONMONOTONE_BRACKET: return "nonmonotone-bracket";
    case XYDQPT_PATTERN_MISMATCH: return "pattern-mismatch";
    case XYDQPT_NEGATIVE_LIMIT: return "negative-limit";
    case XYDQPT_CONFIG: return "config";
    case XYDQPT_IO: return "io";
    case XYDQPT_BUFFER_TOO_SMALL: return "buffer-too-small";
    case XYDQPT_INTERNAL: return "internal";
  }
  return "unknown";
}

int xydqpt_status_is_numerical(xydqpt_status status) {
  switch (status) {
    case XYDQPT_DEGENERATE_ANGLE:
    case XYDQPT_QUADRATURE_NONCONVERGENCE:
    case XYDQPT_NONMONOTONE_BRACKET:
    case XYDQPT_PATTERN_MISMATCH:
    case XYDQPT_NEGATIVE_LIMIT:
    case XYDQPT_INTERNAL:
      return 1;
    default:
      return 0;
  }
}

xydqpt_status xydqpt_momentum_grid(int sites, double* ks, size_t capacity) {
  if (!ks) return null_argument("ks");
  return guarded([&] {
    const xydqpt::MomentumGrid grid(sites);
    if (capacity < grid.size()) return fail(XYDQPT_BUFFER_TOO_SMALL, "need sites/2 slots");
    std::copy(grid.momenta().begin(), grid.momenta().end(), ks);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_dispersion(double gamma, double lambda, double k, double* eps) {
  if (!eps) return null_argument("eps");
  return guarded([&] {
    const xydqpt::ModelParams p{gamma, lambda};
    p.validate();
    *eps = xydqpt::dispersion(p, k);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_bogoliubov_angle(double gamma, double lambda, double k, double* theta) {
  if (!theta) return null_argument("theta");
  return guarded([&] {
    const xydqpt::ModelParams p{gamma, lambda};
    p.validate();
    *theta = xydqpt::bogoliubov_angle(p, k);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_protocol_create(double gamma0, double lambda0, double gammaf, double lambdaf,
                                     double beta, double phi, int sites, xydqpt_protocol** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    xydqpt::QuenchProtocol proto{{gamma0, lambda0}, {gammaf, lambdaf}, {beta, phi}, std::nullopt};
    if (sites != 0) proto.sites = sites;
    proto.validate();
    *out = new xydqpt_protocol{proto};
    return XYDQPT_OK;
  });
}

void xydqpt_protocol_destroy(xydqpt_protocol* proto) { delete proto; }

xydqpt_status xydqpt_mode_amplitude(const xydqpt_protocol* proto, double k, double t, double* re,
                                    double* im) {
  if (!proto) return null_argument("proto");
  if (!re || !im) return null_argument("re/im");
  return guarded([&] {
    const auto g = xydqpt::mode_amplitude(proto->proto, k, t);
    *re = g.real();
    *im = g.imag();
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_rate(const xydqpt_protocol* proto, const double* times, size_t count,
                          unsigned workers, double* values) {
  if (!proto) return null_argument("proto");
  if ((!times || !values) && count > 0) return null_argument("times/values");
  return guarded([&] {
    const std::span<const double> ts(times, count);
    const auto trace = proto->proto.sites ? xydqpt::rate_finite(proto->proto, ts, workers)
                                          : xydqpt::rate_integral(proto->proto, ts, workers);
    std::copy(trace.values.begin(), trace.values.end(), values);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_rate_cusps(const xydqpt_protocol* proto, const double* times, size_t count,
                                unsigned workers, double* cusps, size_t capacity, size_t* found) {
  if (!proto) return null_argument("proto");
  if (!times || !found) return null_argument("times/found");
  return guarded([&] {
    const auto& p = proto->proto;
    const std::span<const double> ts(times, count);
    xydqpt::RateTrace trace;
    std::function<double(double)> resample;
    if (p.sites) {
      trace = xydqpt::rate_finite(p, ts, workers);
      resample = [&p](double t) {
        const double one[] = {t};
        return xydqpt::rate_finite(p, one).values.front();
      };
    } else {
      trace = xydqpt::rate_integral(p, ts, workers);
      resample = [&p](double t) { return xydqpt::rate_integral_at(p, t); };
    }
    const auto found_cusps = xydqpt::detect_cusps(trace, resample);
    *found = found_cusps.size();
    if (found_cusps.size() > capacity) return fail(XYDQPT_BUFFER_TOO_SMALL, "cusp buffer too small");
    if (!found_cusps.empty() && !cusps) return null_argument("cusps");
    std::copy(found_cusps.begin(), found_cusps.end(), cusps);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_crossings(const xydqpt_protocol* proto, double* k_star, double* t_c,
                               size_t capacity, size_t* found) {
  if (!proto) return null_argument("proto");
  if (!found) return null_argument("found");
  return guarded([&] {
    const auto crossings = xydqpt::find_crossings(proto->proto);
    *found = crossings.size();
    if (crossings.size() > capacity) return fail(XYDQPT_BUFFER_TOO_SMALL, "crossing buffer too small");
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (k_star) k_star[i] = crossings[i].k_star;
      if (t_c) std::copy(crossings[i].t_c.begin(), crossings[i].t_c.end(), t_c + 3 * i);
    }
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_fisher_curve(const xydqpt_protocol* proto, int branch, int resolution,
                                  double* k, double* re_z, double* im_z, int* is_crossing) {
  if (!proto) return null_argument("proto");
  if (!k || !re_z || !im_z || !is_crossing) return null_argument("output arrays");
  return guarded([&] {
    const auto curve = xydqpt::fisher_curve(proto->proto, branch, resolution);
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
      k[i] = curve.samples[i].k;
      re_z[i] = curve.samples[i].re_z;
      im_z[i] = curve.samples[i].im_z;
      is_crossing[i] = curve.samples[i].is_crossing ? 1 : 0;
    }
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_critical_beta(const xydqpt_protocol* proto, xydqpt_beta_status* status,
                                   double* beta_c) {
  if (!proto) return null_argument("proto");
  if (!status || !beta_c) return null_argument("status/beta_c");
  return guarded([&] {
    const auto cb = xydqpt::critical_beta(proto->proto);
    switch (cb.status) {
      case xydqpt::BetaStatus::Ok: *status = XYDQPT_BETA_OK; break;
      case xydqpt::BetaStatus::AlwaysTransition: *status = XYDQPT_BETA_ALWAYS; break;
      case xydqpt::BetaStatus::NoTransition: *status = XYDQPT_BETA_NEVER; break;
      case xydqpt::BetaStatus::NonMonotone: *status = XYDQPT_BETA_NONMONOTONE; break;
    }
    *beta_c = cb.beta_c;
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_m_z(double gamma, double lambda, double beta, double phi, int sites,
                         double* mz) {
  if (!mz) return null_argument("mz");
  return guarded([&] {
    *mz = xydqpt::m_z({gamma, lambda}, {beta, phi}, sites);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_correlator(double gamma, double lambda, double beta, double phi, int sites,
                                xydqpt_direction direction, int r, double* re, double* im) {
  if (!re || !im) return null_argument("re/im");
  return guarded([&] {
    const auto table = xydqpt::contractions({gamma, lambda}, {beta, phi}, sites, r);
    const auto c = xydqpt::correlator(
        table, direction == XYDQPT_Y ? xydqpt::Direction::Y : xydqpt::Direction::X, r);
    *re = c.real();
    *im = c.imag();
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_magnetization(double gamma, double lambda, double beta, double phi,
                                   double tol, int r_cap, xydqpt_magnetization_point* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    xydqpt::OrderParameterOptions opts;
    opts.tol = tol;
    opts.r_cap = r_cap;
    const auto m = xydqpt::magnetization({gamma, lambda}, {beta, phi}, opts);
    *out = {m.mx, m.my, m.mz, m.r_used, m.converged ? 1 : 0};
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_pfaffian(const double* re, const double* im, size_t dim, double* pf_re,
                              double* pf_im) {
  if (!re || !im || !pf_re || !pf_im) return null_argument("matrix/result");
  return guarded([&] {
    xydqpt::SkewMatrix a(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = {re[r * dim + c], im[r * dim + c]};
    }
    const auto pf = xydqpt::pfaffian(std::move(a));
    *pf_re = pf.real();
    *pf_im = pf.imag();
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_sweep_create(const char* kind, xydqpt_sweep** out) {
  if (!kind || !out) return null_argument("kind/out");
  *out = nullptr;
  return guarded([&] {
    xydqpt::SweepSpec spec;
    xydqpt::apply_override(spec, std::string("kind=") + kind);
    *out = new xydqpt_sweep{std::move(spec)};
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_sweep_load(const char* path, xydqpt_sweep** out) {
  if (!path || !out) return null_argument("path/out");
  *out = nullptr;
  return guarded([&] {
    *out = new xydqpt_sweep{xydqpt::load_sweep(path)};
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_sweep_parse(const char* json, xydqpt_sweep** out) {
  if (!json || !out) return null_argument("json/out");
  *out = nullptr;
  return guarded([&] {
    *out = new xydqpt_sweep{xydqpt::parse_sweep(json)};
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_sweep_set(xydqpt_sweep* sweep, const char* assignment) {
  if (!sweep || !assignment) return null_argument("sweep/assignment");
  return guarded([&] {
    xydqpt::SweepSpec next = sweep->spec;
    xydqpt::apply_override(next, assignment);
    sweep->spec = std::move(next);
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_sweep_run(xydqpt_sweep* sweep, const char* out_dir, unsigned workers,
                               xydqpt_line_fn on_line, void* user) {
  if (!sweep) return null_argument("sweep");
  return guarded([&] {
    const auto summary = xydqpt::run_sweep(sweep->spec, out_dir ? out_dir : ".", workers);
    emit(on_line, user, summary.line());
    if (summary.failed) return fail(status_of(summary.error), summary.message);
    return XYDQPT_OK;
  });
}

void xydqpt_sweep_destroy(xydqpt_sweep* sweep) { delete sweep; }

const char* xydqpt_default_config_dir(void) { return XYDQPT_CONFIG_DIR; }

xydqpt_status xydqpt_figure_run(const char* tag, const char* config_dir, const char* out_dir,
                                unsigned workers, const char* const* overrides,
                                size_t override_count, xydqpt_line_fn on_line, void* user) {
  if (!tag) return null_argument("tag");
  if (override_count > 0 && !overrides) return null_argument("overrides");
  return guarded([&] {
    auto sweeps = xydqpt::figure_sweeps(tag, config_dir ? config_dir : XYDQPT_CONFIG_DIR);
    for (auto& spec : sweeps) {
      for (std::size_t i = 0; i < override_count; ++i) xydqpt::apply_override(spec, overrides[i]);
      spec.validate();
    }
    for (const auto& spec : sweeps) {
      const auto summary = xydqpt::run_sweep(spec, out_dir ? out_dir : ".", workers);
      emit(on_line, user, summary.line());
      if (summary.failed) return fail(status_of(summary.error), summary.message);
    }
    return XYDQPT_OK;
  });
}

xydqpt_status xydqpt_selftest(xydqpt_line_fn on_line, void* user, int* failures) {
  return guarded([&] {
    const int failed = xydqpt::run_selftest(
        [&](const std::string& line) { emit(on_line, user, line); });
    if (failures) *failures = failed;
    return XYDQPT_OK;
  });
}

}  // extern "C"
