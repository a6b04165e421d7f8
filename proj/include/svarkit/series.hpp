#pragma once

#include <array>
#include <string>
#include <vector>

#include "svarkit/calendar.hpp"

namespace svarkit {

// Raw panel variables and their growth counterparts, in the fixed order used
// everywhere (CSV columns, IRF grids, coefficient names).
inline constexpr std::array<const char*, 5> kRawVariables = {"cumC", "cumD", "cumR", "ER", "SV"};
inline constexpr std::array<const char*, 5> kGrowthVariables = {"GrowthC", "GrowthD", "GrowthR",
                                                                "GrowthER", "GrowthSV"};
inline constexpr std::array<const char*, 5> kBricsCountries = {"BR", "RU", "IN", "CN", "ZA"};

// One variable of one country on an ordered daily calendar.
struct DatedSeries {
  std::string country;
  std::string variable;
  std::vector<Day> dates;
  std::vector<double> values;

  std::size_t size() const { return dates.size(); }

  // Enforces strictly increasing dates, matching lengths, finite values.
  void validate() const;
};

// Dense country x date x variable block. Used both for raw levels
// (PanelDataset, variables = kRawVariables) and for normalized growth rates
// (GrowthPanel, variables = kGrowthVariables).
struct Panel {
  std::vector<std::string> countries;
  std::vector<Day> dates;
  std::vector<std::string> variables;
  std::vector<double> values;  // indexed [country][date][variable]

  std::size_t index(std::size_t c, std::size_t t, std::size_t v) const {
    return (c * dates.size() + t) * variables.size() + v;
  }
  double at(std::size_t c, std::size_t t, std::size_t v) const { return values[index(c, t, v)]; }
  double& at(std::size_t c, std::size_t t, std::size_t v) { return values[index(c, t, v)]; }

  std::size_t n_countries() const { return countries.size(); }
  std::size_t n_dates() const { return dates.size(); }
  std::size_t n_variables() const { return variables.size(); }

  // Time series of one (country, variable) cell as a DatedSeries.
  DatedSeries extract(std::size_t c, std::size_t v) const;

  static Panel empty(std::vector<std::string> countries, std::vector<Day> dates,
                     std::vector<std::string> variables);
};

using PanelDataset = Panel;
using GrowthPanel = Panel;

}  // namespace svarkit
