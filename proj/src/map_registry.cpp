#include "permsieve/map_registry.hpp"

#include <algorithm>

#include "permsieve/arc_diagram.hpp"
#include "permsieve/bijections.hpp"

namespace permsieve {

namespace {

MapDescriptor make(std::string key, std::optional<int> id, std::string name,
                   std::function<Permutation(const Permutation&)> f, bool involution, std::string order) {
  return MapDescriptor{std::move(key), id, std::move(name), std::move(f), involution, std::move(order)};
}

std::function<Permutation(const Permutation&)> swap_at(PositionSwap which) {
  return [which](const Permutation& p) { return position_swap(p, which); };
}

std::vector<MapDescriptor> build() {
  std::vector<MapDescriptor> r;
  r.push_back(make("reverse", std::nullopt, "reverse", reverse, true, "2"));
  r.push_back(make("complement", std::nullopt, "complement", complement, true, "2"));
  r.push_back(make("inverse", std::nullopt, "inverse", inverse, true, "2"));
  r.push_back(make("rotation", 179, "rotation", rotation, false, "n"));
  r.push_back(make("conj_long_cycle", 265, "conjugation by the long cycle", conj_long_cycle, false, "n"));
  r.push_back(make("lehmer_code_rotation", 149, "Lehmer code rotation", lehmer_code_rotation, false, "lcm(1..n)"));
  r.push_back(make("toric_promotion", 310, "toric promotion (guards read the running word, swaps 12, 23, ..., n1)",
                   [](const Permutation& p) { return toric_promotion(p); }, false, "n-1"));
  r.push_back(make("corteel", 239, "Corteel map", corteel, true, "2"));
  r.push_back(make("invert_laguerre_heap", 241, "invert Laguerre heap", invert_laguerre_heap, true, "2"));
  r.push_back(make("alexandersson_kebede", std::nullopt, "Alexandersson-Kebede map", alexandersson_kebede, true, "2"));
  r.push_back(make("psi_3star", std::nullopt, "3** midpoint swap", psi_3star, true, "2"));
  r.push_back(make("psi_32_1", std::nullopt, "recursive 32-1 pairing", psi_32_1, true, "2"));
  r.push_back(make("psi_block", std::nullopt, "block value swap", psi_block, true, "2"));
  r.push_back(make("swap_last_two", std::nullopt, "swap the last two entries", swap_at(PositionSwap::LastTwo), true, "2"));
  r.push_back(make("swap_first_third", std::nullopt, "swap entries 1 and 3", swap_at(PositionSwap::FirstThird), true, "2"));
  r.push_back(make("reverse_prefix_3", std::nullopt, "reverse the first three entries",
                   swap_at(PositionSwap::ReversePrefix3), true, "2"));
  r.push_back(make("swap_first_last", std::nullopt, "swap the first and last entries",
                   swap_at(PositionSwap::FirstLast), true, "2"));
  r.push_back(make("swap_first_two", std::nullopt, "swap entries 1 and 2", swap_at(PositionSwap::FirstTwo), true, "2"));
  r.push_back(make("swap_second_third", std::nullopt, "swap entries 2 and 3", swap_at(PositionSwap::SecondThird), true, "2"));
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return r;
}

}  // namespace

const std::vector<MapDescriptor>& map_registry() {
  static const std::vector<MapDescriptor> registry = build();
  return registry;
}

const MapDescriptor& find_map(std::string_view key) {
  for (const auto& m : map_registry()) {
    if (m.key == key) return m;
  }
  throw Error(Errc::UnknownKey, "no map '" + std::string(key) + "'");
}

std::vector<const MapDescriptor*> registered_involutions() {
  std::vector<const MapDescriptor*> out;
  for (const auto& m : map_registry()) {
    if (m.involution) out.push_back(&m);
  }
  return out;
}

}  // namespace permsieve
