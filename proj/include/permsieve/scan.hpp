#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permsieve/cache.hpp"
#include "permsieve/csp.hpp"

namespace permsieve {

struct ScanFilters {
  std::vector<std::string> stats;  // empty: all
  std::vector<std::string> maps;   // empty: all
};

struct ScanOptions {
  int workers = 1;
  Cache* cache = nullptr;
};

struct PairRecord {
  int n = 0;
  CspVerdict verdict;
};

struct PairResult {
  std::string stat;
  std::string map;
  /// "apparent-csp", "fails" or "skipped".
  std::string status;
  std::optional<int> first_failing_n;
  std::optional<std::uint64_t> witness_d;
  std::vector<PairRecord> records;
  std::vector<std::pair<int, std::string>> skipped;

  std::string pair_key() const { return stat + "|" + map; }
};

struct DedupClass {
  std::string key;
  std::vector<std::string> members;  // pair keys, sorted
};

struct ScanReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<PairResult> pairs;  // sorted by stat key, then map key
  std::vector<DedupClass> classes;
  std::size_t apparent = 0;
  std::size_t failing = 0;
  std::size_t skipped = 0;
};

/// Requires 1 <= n_min <= n_max <= 8.
ScanReport scan(int n_min, int n_max, const ScanFilters& filters = {}, const ScanOptions& options = {});

/// Classes of apparent CSPs sharing orbit signatures and generating
/// functions at every n of the range.
std::vector<DedupClass> dedupe(const ScanReport& report);

struct Observation {
  std::string name;
  int n = 0;
  std::string value;
  bool consistent = false;
};

/// Equidistribution of 373 with 317, the value at -1 of 494, and the
/// width-k verdicts under complement set against n = k (mod 2k).
std::vector<Observation> conjecture_suite(int n_max);

}  // namespace permsieve
