#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace svarkit {

// Doubles are serialized with 17 significant digits so every CSV round-trips
// bit-exactly.
std::string format_double(double value);

// Strict finite-number parse: the whole field must be consumed, no grouping
// separators, no trailing junk. Throws Error(malformed_row).
double parse_number_strict(std::string_view text);

std::string_view trim(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

bool iequals(std::string_view a, std::string_view b);

std::string to_lower(std::string_view text);

}  // namespace svarkit
