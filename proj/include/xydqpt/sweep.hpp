#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "xydqpt/errors.hpp"
#include "xydqpt/sweep_spec.hpp"

namespace xydqpt {

struct SweepSummary {
  std::filesystem::path output;
  SweepKind kind = SweepKind::Fisher;
  std::size_t points = 0;     // grid points completed
  std::size_t rows = 0;       // data rows written
  std::size_t crossings = 0;  // fisher: critical momenta; rate: cusps; beta-c-line: finite beta_c;
                              // dqpt-area: points inside the area
  double wall_seconds = 0.0;
  bool failed = false;
  ErrorCode error = ErrorCode::InvalidArgument;
  std::string message;  // names the offending grid point

  std::string line() const;
};

// Runs the grid and writes the CSV. Config problems throw Error(Config);
// a failing grid point stops the sweep, flushes the completed rows with a
// trailing status column and is reported through the summary.
SweepSummary run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir,
                       unsigned workers = 1);

const std::vector<std::string>& figure_tags();  // fig2 fig3 fig4 fig5 fig6 fig8
// Loads <config_dir>/<tag>.json. Error(Config) for unknown tags.
std::vector<SweepSpec> figure_sweeps(const std::string& tag,
                                     const std::filesystem::path& config_dir);

}  // namespace xydqpt
