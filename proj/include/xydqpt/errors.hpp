#pragma once

#include <stdexcept>
#include <string>

namespace xydqpt {

enum class ErrorCode {
  InvalidArgument,
  DegenerateAngle,
  QuadratureNonConvergence,
  NotSkew,
  NonMonotoneBracket,
  PatternMismatch,
  NegativeLimit,
  Config,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// True for failures of a numerical procedure (as opposed to bad input/config).
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xydqpt
