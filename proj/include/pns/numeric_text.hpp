#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pns {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);

}  // namespace pns
