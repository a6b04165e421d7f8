#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "svarkit/series.hpp"

namespace svarkit {

// BRICS country code -> JHU "Country/Region" label. Unknown codes pass
// through unchanged so synthetic datasets can use their own labels.
std::string jhu_region_name(std::string_view country_code);

struct JhuParseResult {
  DatedSeries series;
  // Dates where the summed cumulative decreases; real JHU data contains such
  // corrections and they are surfaced, not rejected.
  std::vector<std::string> warnings;
};

// Wide-format JHU CSV (Province/State,Country/Region,Lat,Long,<M/D/YY...>).
// Sums all province rows of the requested country.
JhuParseResult parse_jhu(std::istream& in, std::string_view country_code,
                         std::string_view variable = "cumC");

// Yahoo-style OHLCV CSV; keeps the Close column, drops rows with null Close.
DatedSeries parse_market(std::istream& in, std::string_view country_code = "");

// Two-column "date,rate" CSV, rate in local currency units per 1 USD.
DatedSeries parse_fx(std::istream& in, std::string_view country_code = "");

// Override CSV "date,country,variable,value": replaces (or inserts) single
// observations before alignment. Every row must address an existing series.
// Returns the number of points applied.
int apply_overrides(std::istream& in, std::vector<DatedSeries>& series);

enum class FillPolicy { forward, none };

struct AlignResult {
  PanelDataset panel;
  std::vector<std::string> warnings;  // forward-fill activity per series
};

// Aligns one series per (country, variable) onto every calendar day of
// [start, end]. `forward` carries the last observation across gaps; a series
// with no observation at or before `start` is an UnfillableGap.
AlignResult align_panel(const std::vector<DatedSeries>& series, Day start, Day end,
                        FillPolicy fill = FillPolicy::forward);

}  // namespace svarkit
