// Command-line front end. Talks to the library through the C interface only.
#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xydqpt/xydqpt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

int exit_code(xydqpt_status status) {
  if (status == XYDQPT_OK) return kExitOk;
  return xydqpt_status_is_numerical(status) ? kExitNumeric : kExitConfig;
}

int report(xydqpt_status status) {
  if (status != XYDQPT_OK) {
    std::cerr << "xydqpt: " << xydqpt_status_name(status) << ": " << xydqpt_last_error() << '\n';
  }
  return exit_code(status);
}

void print_line(const char* line, void*) { std::cout << line << '\n'; }

std::string fmt(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

struct SweepDeleter {
  void operator()(xydqpt_sweep* s) const { xydqpt_sweep_destroy(s); }
};
using SweepHandle = std::unique_ptr<xydqpt_sweep, SweepDeleter>;

// Flags shared by every sweep-backed subcommand.
struct SweepFlags {
  std::string config;
  std::string path;
  std::string output;
  std::vector<std::string> sets;
  std::vector<std::pair<std::string, std::string>> params;  // name, raw value
  std::optional<double> tol;
  std::optional<int> r_cap;
  std::optional<int> resolution;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--config", f.config, "Sweep config file (JSON)");
  cmd->add_option("--path", f.path, "Named quench path A-G");
  cmd->add_option("--output", f.output, "CSV file name inside --out");
  cmd->add_option("--set", f.sets, "Extra key=value override (repeatable)");
  cmd->add_option("--tol", f.tol, "Order-parameter tolerance");
  cmd->add_option("--r-cap", f.r_cap, "Largest correlator distance");
  cmd->add_option("--resolution", f.resolution, "Fisher-curve k samples");
  f.params.reserve(8);  // options bind to the strings below by reference
  for (const char* name : {"gamma0", "lambda0", "gammaf", "lambdaf", "beta", "phi", "N", "t"}) {
    f.params.emplace_back(name, "");
    cmd->add_option(std::string("--") + name, f.params.back().second,
                    "Value, parameter name, pi expression, min:max:count axis or v1,v2,... list");
  }
}

xydqpt_status build_sweep(const char* kind, const SweepFlags& f, SweepHandle& out) {
  xydqpt_sweep* raw = nullptr;
  xydqpt_status st = f.config.empty() ? xydqpt_sweep_create(kind, &raw)
                                      : xydqpt_sweep_load(f.config.c_str(), &raw);
  if (st != XYDQPT_OK) return st;
  out.reset(raw);
  std::vector<std::string> assignments{std::string("kind=") + kind};
  if (f.config.empty()) assignments.push_back(std::string("output=") + kind + ".csv");
  if (!f.path.empty()) assignments.push_back("path=" + f.path);
  if (!f.output.empty()) assignments.push_back("output=" + f.output);
  if (f.tol) assignments.push_back("tol=" + fmt(*f.tol));
  if (f.r_cap) assignments.push_back("r_cap=" + std::to_string(*f.r_cap));
  if (f.resolution) assignments.push_back("resolution=" + std::to_string(*f.resolution));
  for (const auto& [name, value] : f.params) {
    if (!value.empty()) assignments.push_back(name + "=" + value);
  }
  assignments.insert(assignments.end(), f.sets.begin(), f.sets.end());
  for (const auto& a : assignments) {
    st = xydqpt_sweep_set(out.get(), a.c_str());
    if (st != XYDQPT_OK) return st;
  }
  return XYDQPT_OK;
}

unsigned resolve_workers(int flag) {
  if (flag >= 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("XYDQPT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<unsigned>(v);
  }
  return 0;  // all hardware threads
}

int run_spectrum(double gamma, double lambda, int sites) {
  std::vector<double> ks(static_cast<std::size_t>(std::max(sites, 0) / 2));
  xydqpt_status st = xydqpt_momentum_grid(sites, ks.data(), ks.size());
  if (st != XYDQPT_OK) return report(st);
  std::string text = "k,eps,theta\n";
  for (double k : ks) {
    double eps = 0.0;
    double theta = 0.0;
    st = xydqpt_dispersion(gamma, lambda, k, &eps);
    if (st != XYDQPT_OK) return report(st);
    const bool degenerate = xydqpt_bogoliubov_angle(gamma, lambda, k, &theta) != XYDQPT_OK;
    text += fmt(k) + "," + fmt(eps) + "," + (degenerate ? "nan" : fmt(theta)) + "\n";
  }
  std::cout << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent-Gibbs quenches of the transverse-field XY chain"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir = ".";
  int workers = -1;
  app.add_option("--out", out_dir, "Output directory for CSV files");
  app.add_option("--workers", workers, "Worker threads (0 = all cores; env XYDQPT_WORKERS)");

  double sp_gamma = 0.5;
  double sp_lambda = 0.5;
  int sp_sites = 16;
  auto* spectrum = app.add_subcommand("spectrum", "Dispersion and Bogoliubov angle on the k grid");
  spectrum->add_option("--gamma", sp_gamma);
  spectrum->add_option("--lambda", sp_lambda);
  spectrum->add_option("--N", sp_sites);

  struct SweepCommand {
    const char* name;
    const char* kind;
    const char* help;
    SweepFlags flags;
    CLI::App* app = nullptr;
  };
  std::array<SweepCommand, 6> sweeps{{
      {"fisher", "fisher", "Fisher-zero curves", {}},
      {"rate", "rate", "Loschmidt rate function with cusp flags", {}},
      {"magnetization", "order-param", "M_x, M_y, M_z of the initial state", {}},
      {"mz", "mz", "M_z only", {}},
      {"beta-c", "beta-c-line", "Critical beta along one parameter", {}},
      {"area", "dqpt-area", "DQPT area with magnetization map", {}},
  }};
  for (auto& s : sweeps) {
    s.app = app.add_subcommand(s.name, s.help);
    add_sweep_flags(s.app, s.flags);
  }

  std::string tag;
  std::string config_dir;
  std::vector<std::string> figure_sets;
  auto* figure = app.add_subcommand("figure", "Canned sweeps behind one figure");
  figure->add_option("tag", tag, "fig2 | fig3 | fig4 | fig5 | fig6 | fig8")->required();
  figure->add_option("--config-dir", config_dir, "Directory holding <tag>.json");
  figure->add_option("--set", figure_sets, "key=value override applied to every sweep");
  auto* selftest = app.add_subcommand("selftest", "Cross-check kernels against brute-force oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  const unsigned nworkers = resolve_workers(workers);

  if (spectrum->parsed()) return run_spectrum(sp_gamma, sp_lambda, sp_sites);

  for (auto& s : sweeps) {
    if (!s.app->parsed()) continue;
    SweepHandle handle;
    const xydqpt_status st = build_sweep(s.kind, s.flags, handle);
    if (st != XYDQPT_OK) return report(st);
    return report(xydqpt_sweep_run(handle.get(), out_dir.c_str(), nworkers, print_line, nullptr));
  }

  if (figure->parsed()) {
    std::vector<const char*> sets;
    for (const auto& s : figure_sets) sets.push_back(s.c_str());
    return report(xydqpt_figure_run(tag.c_str(), config_dir.empty() ? nullptr : config_dir.c_str(),
                                    out_dir.c_str(), nworkers, sets.data(), sets.size(),
                                    print_line, nullptr));
  }

  if (selftest->parsed()) {
    int failures = 0;
    const xydqpt_status st = xydqpt_selftest(print_line, nullptr, &failures);
    if (st != XYDQPT_OK) return report(st);
    return failures == 0 ? kExitOk : kExitNumeric;
  }
  return kExitConfig;
}
