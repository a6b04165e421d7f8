#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace svarkit {

// Proleptic Gregorian calendar day, no time zones anywhere in the toolkit.
using Day = std::chrono::sys_days;

inline Day make_day(int year, unsigned month, unsigned day) {
  return std::chrono::sys_days{std::chrono::year{year} / std::chrono::month{month} /
                               std::chrono::day{day}};
}

// Strict "YYYY-MM-DD". Throws Error(malformed_row) on anything else.
Day parse_iso_date(std::string_view text);

// JHU header style "M/D/YY" (also accepts 4-digit years). Two-digit years map
// to 2000-2099. Throws Error(malformed_header) on failure.
Day parse_mdy_date(std::string_view text);

std::string format_iso_date(Day day);

// Inclusive day count of [first, last]; 0 when last < first.
long window_length(Day first, Day last);

}  // namespace svarkit
