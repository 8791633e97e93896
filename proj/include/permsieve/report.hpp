#pragma once

#include <string>

#include <json.hpp>

#include "permsieve/csp.hpp"
#include "permsieve/scan.hpp"

namespace permsieve {

enum class Format { Json, Csv, Markdown };

/// Throws InvalidArgument for anything but json, csv, md.
Format parse_format(const std::string& text);

nlohmann::json to_json(const IntPolynomial& f);
nlohmann::json to_json(const CspVerdict& v);
nlohmann::json to_json(const ScanReport& r);

/// One flat row per (pair, n); the CSV and markdown views share these rows.
struct ReportRow {
  std::string pair;
  std::string stat;
  std::string map;
  int n = 0;
  bool holds = false;
  std::string signature;
  std::string gf;
  std::string fixed;
  std::string status;
};
std::vector<ReportRow> report_rows(const ScanReport& r);

std::string render(const ScanReport& r, Format f);

}  // namespace permsieve
