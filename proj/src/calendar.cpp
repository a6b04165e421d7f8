#include "svarkit/calendar.hpp"

#include <charconv>
#include <cstdio>

#include "svarkit/errors.hpp"

namespace svarkit {

namespace {

bool parse_uint(std::string_view text, unsigned& out) {
  if (text.empty()) return false;
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

Day checked_day(int year, unsigned month, unsigned day, errc code, std::string_view text) {
  std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) fail(code, "not a calendar date: '" + std::string(text) + "'");
  return std::chrono::sys_days{ymd};
}

}  // namespace

Day parse_iso_date(std::string_view text) {
  unsigned y = 0, m = 0, d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !parse_uint(text.substr(0, 4), y) ||
      !parse_uint(text.substr(5, 2), m) || !parse_uint(text.substr(8, 2), d)) {
    fail(errc::malformed_row, "expected YYYY-MM-DD date, got '" + std::string(text) + "'");
  }
  return checked_day(static_cast<int>(y), m, d, errc::malformed_row, text);
}

Day parse_mdy_date(std::string_view text) {
  auto first = text.find('/');
  auto second = first == std::string_view::npos ? std::string_view::npos : text.find('/', first + 1);
  unsigned m = 0, d = 0, y = 0;
  if (second == std::string_view::npos || !parse_uint(text.substr(0, first), m) ||
      !parse_uint(text.substr(first + 1, second - first - 1), d) ||
      !parse_uint(text.substr(second + 1), y)) {
    fail(errc::malformed_header, "expected M/D/YY date, got '" + std::string(text) + "'");
  }
  if (y < 100) y += 2000;
  return checked_day(static_cast<int>(y), m, d, errc::malformed_header, text);
}

std::string format_iso_date(Day day) {
  std::chrono::year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

long window_length(Day first, Day last) {
  if (last < first) return 0;
  return (last - first).count() + 1;
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::missing_country: return "MissingCountry";
    case errc::malformed_header: return "MalformedHeader";
    case errc::malformed_row: return "MalformedRow";
    case errc::empty_file: return "EmptyFile";
    case errc::duplicate_date: return "DuplicateDate";
    case errc::unfillable_gap: return "UnfillableGap";
    case errc::missing_series: return "MissingSeries";
    case errc::length_too_short: return "LengthTooShort";
    case errc::segment_too_short: return "SegmentTooShort";
    case errc::rank_deficient: return "RankDeficient";
    case errc::singular_b: return "SingularB";
    case errc::zero_diagonal_unresolvable: return "ZeroDiagonalUnresolvable";
    case errc::io_error: return "IoError";
    case errc::config_error: return "ConfigError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace svarkit
