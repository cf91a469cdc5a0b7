#include "xydqpt/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>

#include "xydqpt/csv.hpp"
#include "xydqpt/fisher.hpp"
#include "xydqpt/magnetization.hpp"
#include "xydqpt/parallel.hpp"

namespace xydqpt {

namespace {

using Row = std::vector<std::string>;
using csv::number;

struct PointResult {
  std::vector<Row> rows;
  std::size_t crossings = 0;
  std::optional<Error> error;
};

// How one sweep kind turns a grid point into rows.
struct KindPlan {
  Row header;
  std::function<PointResult(std::size_t)> compute;
  std::function<Row(std::size_t)> failure_row;  // parameter columns + nan values
  bool inner_parallel = false;                  // compute() spreads work over the pool itself
};

std::string label_of(const SweepSpec& spec) { return spec.label.empty() ? "-" : spec.label; }

Row nan_fill(Row row, std::size_t width) {
  while (row.size() < width) row.push_back("nan");
  return row;
}

// Order parameter with the negative-limit diagnostic promoted to an error
// when the doubling converged. An unconverged tail averaging slightly below
// zero is reported through converged = 0 and a clamped value instead.
OrderParameter checked_order(const PointParams& p, Direction dir, const SweepSpec& spec) {
  OrderParameterOptions opts;
  opts.tol = spec.tol;
  opts.r_cap = spec.r_cap;
  const OrderParameter op = order_parameter({p.gamma0, p.lambda0}, {p.beta, p.phi}, dir, opts);
  if (op.negative_limit && op.converged) {
    throw Error(ErrorCode::NegativeLimit, std::string("C_") + (dir == Direction::X ? "x" : "y") +
                                              " limit " + number(op.limit) + " is negative");
  }
  return op;
}

KindPlan fisher_plan(const SweepSpec& spec) {
  KindPlan plan;
  plan.header = {"path_label", "beta", "phi", "k", "re_z", "im_z", "branch_n", "is_crossing"};
  plan.compute = [&spec](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    const FisherCurve curve = fisher_curve(p.protocol(), spec.branch, spec.resolution);
    PointResult out;
    out.crossings = curve.crossings.size();
    for (const auto& s : curve.samples) {
      out.rows.push_back({label_of(spec), number(p.beta), number(p.phi), number(s.k),
                          number(s.re_z), number(s.im_z), number(curve.branch),
                          csv::flag(s.is_crossing)});
    }
    return out;
  };
  plan.failure_row = [&spec](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    return nan_fill({label_of(spec), number(p.beta), number(p.phi)}, 8);
  };
  return plan;
}

KindPlan rate_plan(const SweepSpec& spec, unsigned workers) {
  KindPlan plan;
  plan.inner_parallel = true;
  plan.header = {"path_label", "gamma0", "lambda0", "gammaf", "lambdaf", "beta",
                 "phi",        "N",      "t",       "r_t",    "is_cusp"};
  const auto prefix = [&spec](const PointParams& p) {
    return Row{label_of(spec), number(p.gamma0), number(p.lambda0), number(p.gammaf),
               number(p.lambdaf), number(p.beta), number(p.phi), number(p.sites)};
  };
  plan.compute = [&spec, workers, prefix](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    const QuenchProtocol proto = p.protocol();
    const auto& t_axis =
        *std::find_if(spec.axes.begin(), spec.axes.end(), [](const Axis& a) { return a.name == "t"; });
    QuadratureOptions quad;
    quad.abs_tol = spec.quad_tol;
    RateTrace trace;
    std::function<double(double)> resample;
    if (p.sites > 0) {
      trace = rate_finite(proto, t_axis.values, workers);
      resample = [proto](double t) {
        const double ts[] = {t};
        return rate_finite(proto, ts).values.front();
      };
    } else {
      trace = rate_integral(proto, t_axis.values, workers, quad);
      resample = [proto, quad](double t) { return rate_integral_at(proto, t, quad); };
    }
    trace.cusps = detect_cusps(trace, resample);
    std::vector<bool> is_cusp(trace.times.size(), false);
    for (double tc : trace.cusps) {
      const auto it = std::lower_bound(trace.times.begin(), trace.times.end(), tc);
      std::size_t j = static_cast<std::size_t>(it - trace.times.begin());
      if (j == trace.times.size() || (j > 0 && tc - trace.times[j - 1] < trace.times[j] - tc)) --j;
      is_cusp[j] = true;
    }
    PointResult out;
    out.crossings = trace.cusps.size();
    for (std::size_t j = 0; j < trace.times.size(); ++j) {
      Row row = prefix(p);
      row.push_back(number(trace.times[j]));
      row.push_back(number(trace.values[j]));
      row.push_back(csv::flag(is_cusp[j]));
      out.rows.push_back(std::move(row));
    }
    return out;
  };
  plan.failure_row = [&spec, prefix](std::size_t i) {
    return nan_fill(prefix(resolve_point(spec, i)), 11);
  };
  return plan;
}

KindPlan magnetization_plan(const SweepSpec& spec, bool with_order) {
  KindPlan plan;
  plan.header = {"gamma", "lambda", "beta", "phi", "mz", "mx", "my", "r_used", "converged"};
  const auto prefix = [&spec](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    return Row{number(p.gamma0), number(p.lambda0), number(p.beta), number(p.phi)};
  };
  plan.compute = [&spec, with_order, prefix](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    Row row = prefix(i);
    row.push_back(number(m_z({p.gamma0, p.lambda0}, {p.beta, p.phi}, spec.mz_sites)));
    if (with_order) {
      const OrderParameter x = checked_order(p, Direction::X, spec);
      const OrderParameter y = checked_order(p, Direction::Y, spec);
      row.push_back(number(x.value));
      row.push_back(number(y.value));
      row.push_back(number(std::max(x.r_used, y.r_used)));
      row.push_back(csv::flag(x.converged && y.converged));
    } else {
      row.insert(row.end(), {"nan", "nan", "0", "1"});
    }
    PointResult out;
    out.rows.push_back(std::move(row));
    return out;
  };
  plan.failure_row = [prefix](std::size_t i) { return nan_fill(prefix(i), 9); };
  return plan;
}

std::string beta_c_cell(const CriticalBeta& cb) {
  switch (cb.status) {
    case BetaStatus::Ok: return number(cb.beta_c);
    case BetaStatus::AlwaysTransition: return "inf";
    case BetaStatus::NoTransition: return "0";
    case BetaStatus::NonMonotone: return "nan";
  }
  return "nan";
}

KindPlan beta_c_plan(const SweepSpec& spec) {
  KindPlan plan;
  plan.header = {"x_param_name", "x_value", "beta_c", "status"};
  plan.compute = [&spec](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    const CriticalBeta cb = critical_beta(p.protocol());
    PointResult out;
    out.crossings = cb.status == BetaStatus::Ok ? 1 : 0;
    out.rows.push_back({spec.axes.front().name, number(grid_values(spec, i).front()),
                        cb.status == BetaStatus::Ok ? number(cb.beta_c) : "nan",
                        to_string(cb.status)});
    return out;
  };
  plan.failure_row = [&spec](std::size_t i) {
    return nan_fill({spec.axes.front().name, number(grid_values(spec, i).front())}, 4);
  };
  return plan;
}

KindPlan area_plan(const SweepSpec& spec, std::shared_ptr<std::vector<std::string>> beta_c_cells) {
  KindPlan plan;
  plan.header = {"x_value", "y_value", "beta_c_at_max_amplitude", "mx", "my", "mz", "in_dqpt_area"};
  const std::size_t x_axis = spec.axes[0].name == "beta" ? 1 : 0;
  const std::size_t n1 = spec.axes[1].values.size();
  const auto x_index = [x_axis, n1](std::size_t i) { return x_axis == 0 ? i / n1 : i % n1; };
  const auto prefix = [&spec, x_axis](std::size_t i) {
    const auto v = grid_values(spec, i);
    return Row{number(v[x_axis]), number(v[1 - x_axis])};
  };
  plan.compute = [&spec, beta_c_cells, x_index, prefix](std::size_t i) {
    const PointParams p = resolve_point(spec, i);
    const OrderParameter x = checked_order(p, Direction::X, spec);
    const OrderParameter y = checked_order(p, Direction::Y, spec);
    const double mz = m_z({p.gamma0, p.lambda0}, {p.beta, p.phi}, spec.mz_sites);
    const bool inside = has_crossing(p.protocol());
    Row row = prefix(i);
    row.insert(row.end(), {(*beta_c_cells)[x_index(i)], number(x.value), number(y.value),
                           number(mz), csv::flag(inside)});
    PointResult out;
    out.crossings = inside ? 1 : 0;
    out.rows.push_back(std::move(row));
    return out;
  };
  plan.failure_row = [prefix](std::size_t i) { return nan_fill(prefix(i), 7); };
  return plan;
}

}  // namespace

std::string SweepSummary::line() const {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", wall_seconds);
  std::string s = std::string(to_string(kind)) + " -> " + output.string() + ": " +
                  std::to_string(points) + " points, " + std::to_string(crossings) +
                  " crossings, " + std::to_string(rows) + " rows, " +
                  seconds + " s";
  if (failed) s += " [FAILED " + std::string(xydqpt::to_string(error)) + ": " + message + "]";
  return s;
}

SweepSummary run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir,
                       unsigned workers) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  workers = resolve_workers(workers);
  const std::size_t n = grid_size(spec);

  SweepSummary summary;
  summary.kind = spec.kind;
  summary.output = std::filesystem::path(spec.output).is_absolute()
                       ? std::filesystem::path(spec.output)
                       : out_dir / spec.output;

  std::optional<Error> setup_error;
  KindPlan plan;
  switch (spec.kind) {
    case SweepKind::Fisher: plan = fisher_plan(spec); break;
    case SweepKind::Rate: plan = rate_plan(spec, workers); break;
    case SweepKind::Mz: plan = magnetization_plan(spec, false); break;
    case SweepKind::OrderParam: plan = magnetization_plan(spec, true); break;
    case SweepKind::BetaCLine: plan = beta_c_plan(spec); break;
    case SweepKind::DqptArea: {
      // beta_c depends only on the non-beta coordinate.
      const std::size_t x_axis = spec.axes[0].name == "beta" ? 1 : 0;
      const std::size_t nx = spec.axes[x_axis].values.size();
      const std::size_t n1 = spec.axes[1].values.size();
      auto cells = std::make_shared<std::vector<std::string>>(nx);
      std::vector<std::optional<Error>> errors(nx);
      parallel_for(nx, workers, [&](std::size_t ix) {
        const std::size_t idx = x_axis == 0 ? ix * n1 : ix;
        try {
          (*cells)[ix] = beta_c_cell(critical_beta(resolve_point(spec, idx).protocol()));
        } catch (const Error& e) {
          errors[ix] = e;
        }
      });
      for (const auto& e : errors) {
        if (e && !setup_error) setup_error = e;
      }
      plan = area_plan(spec, cells);
      break;
    }
  }

  std::vector<PointResult> results(n);
  const auto run_point = [&](std::size_t i) {
    try {
      results[i] = plan.compute(i);
    } catch (const Error& e) {
      results[i].error = e;
    }
  };
  if (setup_error) {
    results[0].error = setup_error;
  } else if (plan.inner_parallel) {
    for (std::size_t i = 0; i < n; ++i) {
      run_point(i);
      if (results[i].error) break;
    }
  } else {
    parallel_for(n, workers, run_point);
  }

  const auto first_failure = std::find_if(results.begin(), results.end(),
                                          [](const PointResult& r) { return r.error.has_value(); });
  const bool failed = first_failure != results.end();

  std::string text;
  Row header = plan.header;
  if (failed) header.push_back("status");
  text += csv::line(header);
  for (std::size_t i = 0; i < n; ++i) {
    const PointResult& r = results[i];
    if (r.error) {
      Row row = plan.failure_row(i);
      row.push_back(xydqpt::to_string(r.error->code()));
      text += csv::line(row);
      summary.failed = true;
      summary.error = r.error->code();
      std::string coords;
      const auto axes = grid_axes(spec);
      const auto values = grid_values(spec, i);
      for (std::size_t a = 0; a < axes.size(); ++a) {
        coords += (a ? ", " : "") + axes[a]->name + "=" + number(values[a]);
      }
      summary.message = "grid point " + std::to_string(i) + " (" + coords + "): " + r.error->what();
      break;
    }
    for (Row row : r.rows) {
      if (failed) row.push_back("ok");
      text += csv::line(row);
    }
    summary.rows += r.rows.size();
    summary.crossings += r.crossings;
    ++summary.points;
  }

  if (summary.output.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(summary.output.parent_path(), ec);
  }
  std::ofstream out(summary.output, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + summary.output.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for " + summary.output.string());

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

const std::vector<std::string>& figure_tags() {
  static const std::vector<std::string> tags = {"fig2", "fig3", "fig4", "fig5", "fig6", "fig8"};
  return tags;
}

std::vector<SweepSpec> figure_sweeps(const std::string& tag,
                                     const std::filesystem::path& config_dir) {
  const auto& tags = figure_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
    throw Error(ErrorCode::Config, "unknown figure tag '" + tag + "'");
  }
  return load_sweeps(config_dir / (tag + ".json"));
}

}  // namespace xydqpt
