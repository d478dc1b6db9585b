#pragma once

#include <optional>
#include <string>

namespace sparsetrig {

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double value);
/// Empty field when absent.
std::string format_double(const std::optional<double>& value);

}  // namespace sparsetrig
