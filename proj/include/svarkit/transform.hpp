#pragma once

#include <string>
#include <vector>

#include "svarkit/series.hpp"

namespace svarkit {

struct GrowthResult {
  DatedSeries series;          // one point shorter than the input
  std::vector<Day> zero_base_dates;  // days where X_{t-1} = 0 forced G_t = 0
};

// Day-over-day percent growth: G_t = 100 * (X_t - X_{t-1}) / X_{t-1}.
// Requires a dense daily series with at least 2 points.
GrowthResult growth_rate(const DatedSeries& series);

struct ZscoreResult {
  std::vector<double> values;
  bool degenerate = false;  // constant input, returned as all zeros
};

// Centers by the mean and scales by the sample (n-1) standard deviation.
ZscoreResult zscore(const std::vector<double>& values);

enum class NormalizationScope { per_country, pooled };

NormalizationScope parse_normalization_scope(const std::string& text);
const char* normalization_scope_name(NormalizationScope scope);

struct GrowthPanelResult {
  GrowthPanel panel;
  long zero_base_cells = 0;
  std::vector<std::string> degenerate_columns;
};

// growth_rate per (country, variable), then z-score at the requested scope.
// per_country standardizes each (country, variable) column on its own; pooled
// standardizes each variable over all countries stacked.
GrowthPanelResult build_growth_panel(const PanelDataset& panel, NormalizationScope scope);

}  // namespace svarkit
