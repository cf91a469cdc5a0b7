#pragma once

#include <functional>
#include <string>

namespace xydqpt {

// Cross-checks the kernels against the brute-force oracles. Reports one
// "PASS name detail" / "FAIL name detail" line per check; returns the number
// of failures.
int run_selftest(const std::function<void(const std::string&)>& report);

}  // namespace xydqpt
