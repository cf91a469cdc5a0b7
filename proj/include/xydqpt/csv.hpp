#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace xydqpt::csv {

// Fixed format: 17 significant digits, '.' decimal point,
// "nan", "inf", "-inf" for non-finite values.
std::string number(double value);
std::string number(long long value);
inline std::string number(int value) { return number(static_cast<long long>(value)); }
inline std::string flag(bool value) { return value ? "1" : "0"; }

// Comma-joined fields terminated by '\n'.
std::string line(const std::vector<std::string>& fields);

}  // namespace xydqpt::csv
