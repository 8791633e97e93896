#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsieve/permutation.hpp"
#include "permsieve/polynomial.hpp"

namespace permsieve {

struct StatDescriptor {
  std::string key;
  std::optional<int> findstat_id;
  std::string name;
  /// Empty for statistics known only through their generating function.
  std::function<std::int64_t(const Permutation&)> eval;
  /// Set when the generating function is computed without enumeration.
  std::function<IntPolynomial(int)> closed_gf;
  /// Short grouping tag used by reports ("extrema", "mahonian", ...).
  std::string family;
  /// Smallest n on which the statistic is defined.
  int min_n = 1;
  bool may_be_negative = false;

  bool defined_at(int n) const { return n >= min_n; }
};

/// All statistics, sorted by key.
const std::vector<StatDescriptor>& stat_registry();

/// Throws UnknownKey.
const StatDescriptor& find_stat(std::string_view key);

std::int64_t evaluate(const StatDescriptor& stat, const Permutation& p);

}  // namespace permsieve
