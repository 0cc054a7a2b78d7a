#include "s3gas/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace s3gas::io {

void OutputSpec::validate() const {
  if (precision < 6 || precision > 17) {
    throw std::invalid_argument("OutputSpec: precision must lie in [6, 17]");
  }
}

OutputSpec::Format format_from_string(const std::string& name) {
  if (name == "csv") return OutputSpec::Format::csv;
  if (name == "json") return OutputSpec::Format::json;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected csv or json)");
}

std::string format_double(double v, int precision) {
  if (std::isnan(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

const std::vector<std::string> kReportHeader = {
    "method", "R", "T", "RT", "V", "N", "U",
    "F", "Omega", "P", "S", "rho_E", "quality"};

nlohmann::ordered_json report_to_json(const ThermoReport& report) {
  nlohmann::ordered_json j;
  j["method"] = to_string(report.method);
  j["R"] = report.R;
  j["T"] = report.T;
  j["RT"] = report.rt();
  j["V"] = report.V;
  if (std::isnan(report.N)) {
    j["N"] = nullptr;
  } else {
    j["N"] = report.N;
  }
  j["U"] = report.U;
  j["F"] = report.F;
  j["Omega"] = report.Omega;
  j["P"] = report.P;
  j["S"] = report.S;
  j["rho_E"] = report.rho_E;
  j["quality"] = to_string(report.quality);
  return j;
}

std::vector<std::string> report_to_cells(const ThermoReport& report,
                                         int precision) {
  return {to_string(report.method),
          format_double(report.R, precision),
          format_double(report.T, precision),
          format_double(report.rt(), precision),
          format_double(report.V, precision),
          format_double(report.N, precision),
          format_double(report.U, precision),
          format_double(report.F, precision),
          format_double(report.Omega, precision),
          format_double(report.P, precision),
          format_double(report.S, precision),
          format_double(report.rho_E, precision),
          to_string(report.quality)};
}

void write_output(const OutputSpec& spec, const std::string& content) {
  if (spec.path.empty()) {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) {
      throw std::runtime_error("write failure on standard output");
    }
    return;
  }
  std::ofstream out(spec.path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + spec.path + "'");
  }
  out << content;
  out.flush();
  if (!out) {
    throw std::runtime_error("write failure on '" + spec.path + "'");
  }
}

}  // namespace s3gas::io
