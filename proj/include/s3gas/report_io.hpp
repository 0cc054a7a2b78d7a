// report_io.hpp — deterministic serialization of reports and tables.
//
// CSV dialect: comma separator, '.' decimal point, one header row, LF line
// endings, numbers in shortest round-trip form at the configured number of
// significant digits (std::to_chars, locale-free). NaN fields are emitted
// as empty cells. Identical invocations produce byte-identical output.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "s3gas/continuum.hpp"

namespace s3gas::io {

struct OutputSpec {
  enum class Format { csv, json };

  Format format = Format::csv;
  std::string path;    // empty = standard output
  int precision = 12;  // significant digits, [6, 17]

  void validate() const;  // throws std::invalid_argument
};

OutputSpec::Format format_from_string(const std::string& name);

/// Shortest round-trip representation of v at `precision` significant
/// digits. NaN becomes the empty string.
std::string format_double(double v, int precision);

/// One CSV line from already-formatted cells, LF-terminated.
std::string csv_row(const std::vector<std::string>& cells);

/// Report as an ordered JSON object (field order fixed; NaN -> null).
nlohmann::ordered_json report_to_json(const ThermoReport& report);

/// Report as CSV cells in the header order
/// method,R,T,RT,V,N,U,F,Omega,P,S,rho_E,quality.
std::vector<std::string> report_to_cells(const ThermoReport& report,
                                         int precision);
extern const std::vector<std::string> kReportHeader;

/// Writes to spec.path, or to stdout when the path is empty.
/// Throws std::runtime_error on write failure.
void write_output(const OutputSpec& spec, const std::string& content);

}  // namespace s3gas::io
