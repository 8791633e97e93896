#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permsieve/acceptance.hpp"
#include "permsieve/cache.hpp"
#include "permsieve/csp.hpp"
#include "permsieve/report.hpp"
#include "permsieve/scan.hpp"

namespace permsieve::cli {

namespace {

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::UnknownKey:
    case Errc::NotAPermutation:
    case Errc::EmptyInput:
    case Errc::WidthOutOfRange:
    case Errc::ParityViolation:
      return true;
    default:
      return false;
  }
}

void print_verdict(std::ostream& out, const CspVerdict& v) {
  out << (v.holds ? "holds" : "fails") << '\n';
  out << "order " << v.order << ", orbits " << v.signature << '\n';
  out << "gf " << v.gf.to_string() << '\n';
  out << "d\tfixed\tf(zeta^d)\n";
  for (const auto& row : v.table) {
    const double re = std::abs(static_cast<double>(row.value_re)) < 5e-10 ? 0.0 : static_cast<double>(row.value_re);
    const double im = std::abs(static_cast<double>(row.value_im)) < 5e-10 ? 0.0 : static_cast<double>(row.value_im);
    out << row.d << '\t' << row.fixed << '\t' << re;
    if (im != 0) out << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    out << (row.agrees ? "" : "\tmismatch") << '\n';
  }
}

std::string trim(std::string_view t) {
  const auto b = t.find_first_not_of(" \t\r\"");
  if (b == std::string_view::npos) return {};
  const auto e = t.find_last_not_of(" \t\r\"");
  return std::string(t.substr(b, e - b + 1));
}

// Lines are "key = value"; '#' starts a comment. Values fill in options not
// given on the command line. List values are separated by commas.
bool apply_config(CLI::App& cmd, const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      err << path << ":" << lineno << ": expected key = value\n";
      return false;
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = key == "config" ? nullptr : cmd.get_option_no_throw("--" + key);
    if (!opt) {
      err << path << ":" << lineno << ": unknown key '" << key << "'\n";
      return false;
    }
    if (opt->count() > 0) continue;
    if (!value.empty() && value.front() == '[') value = value.substr(1, value.find(']') - 1);
    std::stringstream parts(value);
    for (std::string part; std::getline(parts, part, ',');) {
      if (!trim(part).empty()) opt->add_result(trim(part));
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      err << path << ":" << lineno << ": " << e.what() << '\n';
      return false;
    }
  }
  return true;
}

struct Settings {
  std::string stat, map, stat_b, perm;
  int n = 0;
  std::string format = "text";
  int n_min = 4, n_max = 6;
  int workers = 1;
  std::string cache_dir;
  bool no_cache = false;
  std::vector<std::string> stat_filter, map_filter;
  std::string output;
  std::string scratch;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cyclic sieving checks over S_n", "permsieve"};
  app.require_subcommand(1);
  Settings s;

  auto* stat = app.add_subcommand("stat", "Evaluate a statistic or its generating function");
  stat->require_subcommand(1);
  auto* stat_eval = stat->add_subcommand("eval", "Statistic value on one permutation");
  stat_eval->add_option("key", s.stat)->required();
  stat_eval->add_option("perm", s.perm)->required();
  auto* stat_gf = stat->add_subcommand("gf", "Generating function over S_n");
  stat_gf->add_option("key", s.stat)->required();
  stat_gf->add_option("--n", s.n)->required()->check(CLI::Range(1, 10));
  stat_gf->add_option("--format", s.format)->check(CLI::IsMember({"text", "json"}));
  auto* stat_list = stat->add_subcommand("list", "Registered statistics");

  auto* map = app.add_subcommand("map", "Apply a map or decompose it into orbits");
  map->require_subcommand(1);
  auto* map_apply = map->add_subcommand("apply", "Image of one permutation");
  map_apply->add_option("key", s.map)->required();
  map_apply->add_option("perm", s.perm)->required();
  auto* map_orbits = map->add_subcommand("orbits", "Orbit sizes on S_n");
  map_orbits->add_option("key", s.map)->required();
  map_orbits->add_option("--n", s.n)->required()->check(CLI::Range(1, 10));
  auto* map_list = map->add_subcommand("list", "Registered maps");

  auto* csp = app.add_subcommand("csp", "Cyclic sieving verdicts");
  csp->require_subcommand(1);
  auto* csp_check_cmd = csp->add_subcommand("check", "Exact verdict for one (stat, map, n)");
  csp_check_cmd->add_option("stat", s.stat)->required();
  csp_check_cmd->add_option("map", s.map)->required();
  csp_check_cmd->add_option("--n", s.n)->required()->check(CLI::Range(1, 10));
  csp_check_cmd->add_option("--format", s.format)->check(CLI::IsMember({"text", "json"}));

  auto* equidist = app.add_subcommand("equidist", "Compare two distributions on S_n");
  equidist->add_option("statA", s.stat)->required();
  equidist->add_option("statB", s.stat_b)->required();
  equidist->add_option("--n", s.n)->required()->check(CLI::Range(1, 10));

  auto* scan_cmd = app.add_subcommand("scan", "Every registered (stat, map) pair over a range of n");
  std::string config_path;
  scan_cmd->add_option("--config", config_path, "key = value file supplying any of these options")
      ->check(CLI::ExistingFile);
  scan_cmd->add_option("--min-n", s.n_min)->check(CLI::Range(1, 8));
  scan_cmd->add_option("--max-n", s.n_max)->check(CLI::Range(1, 8));
  scan_cmd->add_option("--format", s.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  scan_cmd->add_option("--workers", s.workers)->check(CLI::Range(1, 256));
  scan_cmd->add_option("--cache-dir", s.cache_dir, "Defaults to $PERMSIEVE_CACHE_DIR, else ./cache");
  scan_cmd->add_flag("--no-cache", s.no_cache);
  scan_cmd->add_option("--stat", s.stat_filter, "Restrict to these statistics");
  scan_cmd->add_option("--map", s.map_filter, "Restrict to these maps");
  scan_cmd->add_option("--output,-o", s.output, "Write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--scratch", s.scratch, "Directory for the determinism check");
  verify->add_option("--workers", s.workers)->check(CLI::Range(1, 256));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*stat_eval) {
      out << evaluate(find_stat(s.stat), parse_permutation(s.perm)) << '\n';
    } else if (*stat_gf) {
      const IntPolynomial f = generating_function(find_stat(s.stat), s.n);
      if (s.format == "json") out << to_json(f).dump(2) << '\n';
      else out << f.to_string() << '\n';
    } else if (*stat_list) {
      for (const auto& d : stat_registry()) out << d.key << '\t' << d.name << '\n';
    } else if (*map_apply) {
      out << find_map(s.map).apply(parse_permutation(s.perm)).to_string() << '\n';
    } else if (*map_orbits) {
      const OrbitDecomposition d = decompose(find_map(s.map), s.n);
      out << "order " << d.order << '\n' << orbit_signature(d) << '\n';
    } else if (*map_list) {
      for (const auto& d : map_registry()) {
        out << d.key << '\t' << d.name << (d.involution ? "\tinvolution" : "") << '\n';
      }
    } else if (*csp_check_cmd) {
      const CspVerdict v = csp_check(find_stat(s.stat), find_map(s.map), s.n);
      if (s.format == "json") out << to_json(v).dump(2) << '\n';
      else print_verdict(out, v);
      return v.holds ? kSuccess : kVerdictFailure;
    } else if (*equidist) {
      const bool same = equidistribution(find_stat(s.stat), find_stat(s.stat_b), s.n);
      out << (same ? "equidistributed" : "not equidistributed") << '\n';
      return same ? kSuccess : kVerdictFailure;
    } else if (*scan_cmd) {
      if (!config_path.empty() && !apply_config(*scan_cmd, config_path, err)) return kUsageError;
      if (s.n_min > s.n_max) {
        err << "--min-n must not exceed --max-n\n";
        return kUsageError;
      }
      const Format format = parse_format(s.format == "text" ? "json" : s.format);
      std::optional<Cache> cache;
      if (!s.no_cache) cache.emplace(s.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(s.cache_dir));
      ScanFilters filters{s.stat_filter, s.map_filter};
      const ScanReport report = scan(s.n_min, s.n_max, filters, {s.workers, cache ? &*cache : nullptr});
      const std::string text = render(report, format);
      if (s.output.empty()) {
        out << text;
      } else {
        std::ofstream f(s.output, std::ios::binary);
        f << text;
        if (!f) throw Error(Errc::IoFailure, "cannot write " + s.output);
      }
    } else if (*verify) {
      AcceptanceOptions options;
      if (!s.scratch.empty()) options.scratch = s.scratch;
      options.workers = std::max(2, s.workers);
      options.on_result = [&](const CriterionResult& r) { out << format_result(r) << std::flush; };
      const auto results = run_acceptance(options);
      const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
      out << passed << "/" << results.size() << " criteria passed\n";
      return passed == static_cast<long>(results.size()) ? kSuccess : kVerdictFailure;
    }
  } catch (const Error& e) {
    err << "permsieve: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kUsageError : kVerdictFailure;
  } catch (const std::exception& e) {
    err << "permsieve: " << e.what() << '\n';
    return kVerdictFailure;
  }
  return kSuccess;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace permsieve::cli
