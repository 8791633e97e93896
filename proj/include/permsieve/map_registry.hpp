#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsieve/permutation.hpp"

namespace permsieve {

struct MapDescriptor {
  std::string key;
  std::optional<int> findstat_id;
  std::string name;
  std::function<Permutation(const Permutation&)> apply;
  bool involution = false;
  /// Free-form note on the expected orbit structure, for reports.
  std::string declared_order;
};

/// All maps, sorted by key.
const std::vector<MapDescriptor>& map_registry();

/// Throws UnknownKey.
const MapDescriptor& find_map(std::string_view key);

/// Every map flagged as an involution, in key order.
std::vector<const MapDescriptor*> registered_involutions();

}  // namespace permsieve
