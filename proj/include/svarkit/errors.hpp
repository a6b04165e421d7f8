#pragma once

#include <stdexcept>
#include <string>

namespace svarkit {

// Failure categories surfaced by the toolkit. CLI maps config_error to exit
// code 2, everything else to 1.
enum class errc {
  missing_country,
  malformed_header,
  malformed_row,
  empty_file,
  duplicate_date,
  unfillable_gap,
  missing_series,
  length_too_short,
  segment_too_short,
  rank_deficient,
  singular_b,
  zero_diagonal_unresolvable,
  io_error,
  config_error,
  invalid_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace svarkit
