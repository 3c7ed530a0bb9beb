#pragma once

#include <string>

namespace noderank {

/// Shortest decimal text that round-trips to exactly `value`.
std::string format_real(double value);

/// CSV field, quoted only when it contains a comma, quote or line break.
std::string csv_field(const std::string& text);

}  // namespace noderank
