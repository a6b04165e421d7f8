#pragma once

#include <istream>
#include <string>
#include <vector>

namespace svarkit {

// RFC-4180-ish field splitting: quoted fields may contain commas and doubled
// quotes ("" -> "). The JHU files need this for names like "Korea, South".
std::vector<std::string> split_csv_row(const std::string& line);

// Reads the next line, tolerating \r\n endings and a UTF-8 BOM on the first
// line. Returns false at EOF.
bool read_csv_line(std::istream& in, std::string& line, bool first_line = false);

// Quotes a field when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace svarkit
