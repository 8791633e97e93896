#include "permsieve/report.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace permsieve {

namespace {

double rounded(long double x) {
  const double r = std::round(static_cast<double>(x) * 1e9) / 1e9;
  return r == 0 ? 0.0 : r;  // no negative zero
}

std::string join_fixed(const CspVerdict& v) {
  std::string out;
  for (const auto& row : v.table) {
    if (!out.empty()) out += ' ';
    out += std::to_string(row.fixed);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "md") return Format::Markdown;
  throw Error(Errc::InvalidArgument, "format must be json, csv or md");
}

nlohmann::json to_json(const IntPolynomial& f) {
  return {{"offset", f.min_exponent()}, {"coeffs", f.raw_coeffs()}, {"text", f.to_string()}};
}

nlohmann::json to_json(const CspVerdict& v) {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : v.table) {
    table.push_back({{"d", row.d},
                     {"fixed", row.fixed},
                     {"value", {rounded(row.value_re), rounded(row.value_im)}},
                     {"agrees", row.agrees}});
  }
  return {{"n", v.n},
          {"order", v.order},
          {"holds", v.holds},
          {"table", table},
          {"signature", v.signature},
          {"gf", to_json(v.gf)},
          {"residue_f", v.residue_f.dense()},
          {"residue_t", v.residue_t.dense()},
          {"witnesses", v.witnesses},
          {"shift_used", v.shift_used},
          {"shift_consistent", v.shift_consistent}};
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json records = nlohmann::json::array();
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pr : r.pairs) {
    for (const auto& rec : pr.records) {
      nlohmann::json j = to_json(rec.verdict);
      j["pair"] = pr.pair_key();
      records.push_back(std::move(j));
    }
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& [n, reason] : pr.skipped) skipped.push_back({{"n", n}, {"reason", reason}});
    pairs.push_back({{"pair", pr.pair_key()},
                     {"stat", pr.stat},
                     {"map", pr.map},
                     {"status", pr.status},
                     {"first_failing_n", pr.first_failing_n ? nlohmann::json(*pr.first_failing_n) : nlohmann::json()},
                     {"witness_d", pr.witness_d ? nlohmann::json(*pr.witness_d) : nlohmann::json()},
                     {"skipped", skipped}});
  }
  std::set<std::string> map_keys;
  for (const auto& pr : r.pairs) map_keys.insert(pr.map);
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& key : map_keys) maps.push_back({{"key", key}, {"name", find_map(key).name}});
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) classes.push_back({{"members", c.members}, {"key", c.key}});
  return {{"n_min", r.n_min},
          {"n_max", r.n_max},
          {"records", records},
          {"pairs", pairs},
          {"maps", maps},
          {"classes", classes},
          {"summary",
           {{"pairs", r.pairs.size()},
            {"apparent_csp", r.apparent},
            {"fails", r.failing},
            {"skipped", r.skipped},
            {"classes", r.classes.size()}}}};
}

std::vector<ReportRow> report_rows(const ScanReport& r) {
  std::vector<ReportRow> rows;
  for (const auto& pr : r.pairs) {
    for (const auto& rec : pr.records) {
      rows.push_back({pr.pair_key(), pr.stat, pr.map, rec.n, rec.verdict.holds, rec.verdict.signature,
                      rec.verdict.gf.to_string(), join_fixed(rec.verdict), pr.status});
    }
  }
  return rows;
}

std::string render(const ScanReport& r, Format f) {
  if (f == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  const auto rows = report_rows(r);
  if (f == Format::Csv) {
    os << "pair,stat,map,n,holds,signature,gf,fixed,status\n";
    for (const auto& row : rows) {
      os << csv_field(row.pair) << ',' << row.stat << ',' << row.map << ',' << row.n << ','
         << (row.holds ? "true" : "false") << ',' << csv_field(row.signature) << ',' << csv_field(row.gf) << ','
         << csv_field(row.fixed) << ',' << row.status << '\n';
    }
    return os.str();
  }
  os << "# Scan " << r.n_min << ".." << r.n_max << "\n\n";
  os << "Pairs: " << r.pairs.size() << ", apparent CSP: " << r.apparent << ", failing: " << r.failing
     << ", skipped: " << r.skipped << ", classes: " << r.classes.size() << "\n\n";
  os << "| pair | n | holds | signature | gf | fixed | status |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    os << "| " << row.pair << " | " << row.n << " | " << (row.holds ? "yes" : "no") << " | " << row.signature
       << " | " << row.gf << " | " << row.fixed << " | " << row.status << " |\n";
  }
  return os.str();
}

}  // namespace permsieve
