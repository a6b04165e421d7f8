#include "svarkit/ingest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "svarkit/csv.hpp"
#include "svarkit/errors.hpp"
#include "svarkit/textio.hpp"

namespace svarkit {

std::string jhu_region_name(std::string_view country_code) {
  if (country_code == "BR") return "Brazil";
  if (country_code == "RU") return "Russia";
  if (country_code == "IN") return "India";
  if (country_code == "CN") return "China";
  if (country_code == "ZA") return "South Africa";
  return std::string(country_code);
}

JhuParseResult parse_jhu(std::istream& in, std::string_view country_code,
                         std::string_view variable) {
  std::string line;
  if (!read_csv_line(in, line, true)) fail(errc::empty_file, "JHU file has no header");
  auto header = split_csv_row(line);
  if (header.size() < 5 || header[0] != "Province/State" || header[1] != "Country/Region") {
    fail(errc::malformed_header, "not a JHU wide-format header");
  }

  std::vector<Day> dates;
  dates.reserve(header.size() - 4);
  for (std::size_t j = 4; j < header.size(); ++j) {
    Day d = parse_mdy_date(header[j]);
    if (!dates.empty() && !(dates.back() < d)) {
      fail(errc::malformed_header, "JHU date columns not increasing at " + header[j]);
    }
    dates.push_back(d);
  }

  const std::string region = jhu_region_name(country_code);
  std::vector<double> sums(dates.size(), 0.0);
  bool matched = false;
  while (read_csv_line(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != header.size()) {
      fail(errc::malformed_row, "JHU row has " + std::to_string(fields.size()) + " fields, expected " +
                                    std::to_string(header.size()));
    }
    if (fields[1] != region) continue;
    matched = true;
    for (std::size_t j = 0; j < dates.size(); ++j) {
      sums[j] += parse_number_strict(fields[4 + j]);
    }
  }
  if (!matched) fail(errc::missing_country, "no JHU row for country " + region);

  JhuParseResult out;
  out.series.country = std::string(country_code);
  out.series.variable = std::string(variable);
  out.series.dates = std::move(dates);
  out.series.values = std::move(sums);
  for (std::size_t t = 1; t < out.series.size(); ++t) {
    if (out.series.values[t] < out.series.values[t - 1]) {
      out.warnings.push_back("non-monotone cumulative " + std::string(variable) + " for " +
                             std::string(country_code) + " on " +
                             format_iso_date(out.series.dates[t]));
    }
  }
  out.series.validate();
  return out;
}

DatedSeries parse_market(std::istream& in, std::string_view country_code) {
  std::string line;
  if (!read_csv_line(in, line, true)) fail(errc::empty_file, "market file has no header");
  auto header = split_csv_row(line);
  if (header.size() < 5 || header[0] != "Date") {
    fail(errc::malformed_row, "not a Date,Open,High,Low,Close,... header");
  }
  auto close_it = std::find(header.begin(), header.end(), "Close");
  if (close_it == header.end()) fail(errc::malformed_row, "market header lacks a Close column");
  const std::size_t close_col = static_cast<std::size_t>(close_it - header.begin());

  DatedSeries series;
  series.country = std::string(country_code);
  series.variable = "SV";
  while (read_csv_line(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != header.size()) {
      fail(errc::malformed_row, "market row has " + std::to_string(fields.size()) +
                                    " fields, expected " + std::to_string(header.size()));
    }
    auto close = trim(fields[close_col]);
    if (close.empty() || iequals(close, "null")) continue;  // non-trading day
    series.dates.push_back(parse_iso_date(fields[0]));
    series.values.push_back(parse_number_strict(close));
  }
  if (series.dates.empty()) fail(errc::empty_file, "market file has no usable rows");
  series.validate();
  return series;
}

DatedSeries parse_fx(std::istream& in, std::string_view country_code) {
  std::string line;
  if (!read_csv_line(in, line, true)) fail(errc::empty_file, "fx file has no header");
  auto header = split_csv_row(line);
  if (header.size() != 2) fail(errc::malformed_row, "fx header must have exactly two columns");

  DatedSeries series;
  series.country = std::string(country_code);
  series.variable = "ER";
  while (read_csv_line(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != 2) {
      fail(errc::malformed_row, "fx row has " + std::to_string(fields.size()) + " fields, expected 2");
    }
    Day d = parse_iso_date(fields[0]);
    if (!series.dates.empty() && d == series.dates.back()) {
      fail(errc::duplicate_date, "fx file repeats " + format_iso_date(d));
    }
    series.dates.push_back(d);
    series.values.push_back(parse_number_strict(fields[1]));
  }
  if (series.dates.empty()) fail(errc::empty_file, "fx file has no data rows");
  series.validate();
  return series;
}

int apply_overrides(std::istream& in, std::vector<DatedSeries>& series) {
  std::string line;
  if (!read_csv_line(in, line, true)) fail(errc::empty_file, "override file has no header");
  if (split_csv_row(line).size() != 4) {
    fail(errc::malformed_row, "override header must be date,country,variable,value");
  }
  int applied = 0;
  while (read_csv_line(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != 4) {
      fail(errc::malformed_row, "override row has " + std::to_string(fields.size()) + " fields");
    }
    Day d = parse_iso_date(fields[0]);
    double value = parse_number_strict(fields[3]);
    auto target = std::find_if(series.begin(), series.end(), [&](const DatedSeries& s) {
      return s.country == fields[1] && s.variable == fields[2];
    });
    if (target == series.end()) {
      fail(errc::missing_series, "override addresses unknown series " + fields[1] + "/" + fields[2]);
    }
    auto pos = std::lower_bound(target->dates.begin(), target->dates.end(), d);
    if (pos != target->dates.end() && *pos == d) {
      target->values[static_cast<std::size_t>(pos - target->dates.begin())] = value;
    } else {
      auto at = static_cast<std::size_t>(pos - target->dates.begin());
      target->dates.insert(pos, d);
      target->values.insert(target->values.begin() + static_cast<std::ptrdiff_t>(at), value);
    }
    ++applied;
  }
  return applied;
}

AlignResult align_panel(const std::vector<DatedSeries>& series, Day start, Day end,
                        FillPolicy fill) {
  if (end < start) fail(errc::invalid_argument, "window end precedes start");

  std::vector<std::string> countries;
  std::vector<std::string> variables;
  std::map<std::pair<std::string, std::string>, const DatedSeries*> by_key;
  for (const auto& s : series) {
    s.validate();
    auto key = std::make_pair(s.country, s.variable);
    if (by_key.count(key)) {
      fail(errc::invalid_argument, "more than one series for " + s.country + "/" + s.variable);
    }
    by_key[key] = &s;
    if (std::find(countries.begin(), countries.end(), s.country) == countries.end()) {
      countries.push_back(s.country);
    }
    if (std::find(variables.begin(), variables.end(), s.variable) == variables.end()) {
      variables.push_back(s.variable);
    }
  }
  if (by_key.empty()) fail(errc::missing_series, "no input series");

  std::vector<Day> dates;
  for (Day d = start; d <= end; d += std::chrono::days{1}) dates.push_back(d);

  AlignResult out{Panel::empty(countries, dates, variables), {}};
  const bool covid_panel = variables == std::vector<std::string>(kRawVariables.begin(), kRawVariables.end());
  for (std::size_t c = 0; c < countries.size(); ++c) {
    for (std::size_t v = 0; v < variables.size(); ++v) {
      auto it = by_key.find({countries[c], variables[v]});
      if (it == by_key.end()) {
        fail(errc::missing_series, "no series for " + countries[c] + "/" + variables[v]);
      }
      const DatedSeries& s = *it->second;
      // Walk the calendar with a cursor over the (sorted) observations.
      std::size_t cursor = 0;
      bool seeded = false;
      double last = 0.0;
      long filled = 0;
      for (std::size_t t = 0; t < dates.size(); ++t) {
        while (cursor < s.size() && s.dates[cursor] <= dates[t]) {
          last = s.values[cursor];
          seeded = true;
          ++cursor;
        }
        const bool observed_today = cursor > 0 && s.dates[cursor - 1] == dates[t];
        if (!seeded) {
          fail(errc::unfillable_gap, "series " + s.country + "/" + s.variable +
                                         " has no observation at or before " + format_iso_date(start));
        }
        if (!observed_today) {
          if (fill == FillPolicy::none) {
            fail(errc::unfillable_gap, "series " + s.country + "/" + s.variable + " missing " +
                                           format_iso_date(dates[t]) + " under fill policy 'none'");
          }
          ++filled;
        }
        out.panel.at(c, t, v) = last;
      }
      if (filled > 0) {
        std::string note = countries[c] + "/" + variables[v] + ": forward-filled " +
                           std::to_string(filled) + " of " + std::to_string(dates.size()) + " days";
        if (covid_panel && v <= 2) note += " (COVID series expected to be daily)";
        out.warnings.push_back(std::move(note));
      }
    }
  }
  return out;
}

}  // namespace svarkit
