#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permsieve/map_registry.hpp"

namespace permsieve {

/// Orbits of a bijection on S_n, each stored as lex ranks in iteration order
/// starting from its lex-least element. Orbits are listed by that element.
struct OrbitDecomposition {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> orbits;
  std::map<std::uint64_t, std::uint64_t> size_counts;  // orbit size -> how many
  std::uint64_t order = 1;                               // lcm of orbit sizes

  std::uint64_t total() const;
};

OrbitDecomposition decompose(const MapDescriptor& map, int n);

/// Orbit decomposition from orbit sizes alone (orbits left empty); used when
/// reloading cached structures.
OrbitDecomposition decomposition_from_sizes(int n, const std::map<std::uint64_t, std::uint64_t>& size_counts);

/// Entry d = number of elements fixed by g^d, for d = 0..order-1.
std::vector<std::uint64_t> fixed_counts(const OrbitDecomposition& d);

/// "size:count,size:count" with sizes ascending.
std::string orbit_signature(const OrbitDecomposition& d);

}  // namespace permsieve
