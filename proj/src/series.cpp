#include "svarkit/series.hpp"

#include <cmath>

#include "svarkit/errors.hpp"

namespace svarkit {

void DatedSeries::validate() const {
  if (dates.size() != values.size()) {
    fail(errc::invalid_argument, "series " + country + "/" + variable + ": date/value length mismatch");
  }
  for (std::size_t i = 0; i < dates.size(); ++i) {
    if (i > 0 && !(dates[i - 1] < dates[i])) {
      fail(errc::duplicate_date, "series " + country + "/" + variable +
                                     ": dates not strictly increasing at " + format_iso_date(dates[i]));
    }
    if (!std::isfinite(values[i])) {
      fail(errc::invalid_argument, "series " + country + "/" + variable + ": non-finite value at " +
                                       format_iso_date(dates[i]));
    }
  }
}

DatedSeries Panel::extract(std::size_t c, std::size_t v) const {
  DatedSeries out;
  out.country = countries.at(c);
  out.variable = variables.at(v);
  out.dates = dates;
  out.values.reserve(dates.size());
  for (std::size_t t = 0; t < dates.size(); ++t) out.values.push_back(at(c, t, v));
  return out;
}

Panel Panel::empty(std::vector<std::string> countries, std::vector<Day> dates,
                   std::vector<std::string> variables) {
  Panel p;
  p.countries = std::move(countries);
  p.dates = std::move(dates);
  p.variables = std::move(variables);
  p.values.assign(p.countries.size() * p.dates.size() * p.variables.size(), 0.0);
  return p;
}

}  // namespace svarkit
