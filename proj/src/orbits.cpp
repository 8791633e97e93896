#include "permsieve/orbits.hpp"

#include <numeric>
#include <sstream>

namespace permsieve {

std::uint64_t OrbitDecomposition::total() const {
  std::uint64_t t = 0;
  for (auto [size, count] : size_counts) t += size * count;
  return t;
}

namespace {

void finish(OrbitDecomposition& d) {
  d.order = 1;
  for (auto [size, count] : d.size_counts) d.order = std::lcm(d.order, size);
}

}  // namespace

OrbitDecomposition decompose(const MapDescriptor& map, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (n > 10) throw Error(Errc::InvalidArgument, "orbit enumeration is limited to n <= 10");
  const std::uint64_t total = factorial(n);
  std::vector<bool> seen(total, false);
  OrbitDecomposition d;
  d.n = n;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (seen[seed]) continue;
    std::vector<std::uint32_t> orbit;
    Permutation cur = lex_unrank(n, seed);
    std::uint64_t r = seed;
    do {
      if (seen[r]) {
        throw Error(Errc::NotABijection, map.key + " revisits " + cur.to_string() + " before closing an orbit");
      }
      seen[r] = true;
      orbit.push_back(static_cast<std::uint32_t>(r));
      cur = map.apply(cur);
      if (cur.size() != n) throw Error(Errc::NotABijection, map.key + " changed the size");
      r = lex_rank(cur);
    } while (r != seed);
    ++d.size_counts[orbit.size()];
    d.orbits.push_back(std::move(orbit));
  }
  finish(d);
  return d;
}

OrbitDecomposition decomposition_from_sizes(int n, const std::map<std::uint64_t, std::uint64_t>& size_counts) {
  OrbitDecomposition d;
  d.n = n;
  d.size_counts = size_counts;
  finish(d);
  if (d.total() != factorial(n)) throw Error(Errc::CacheCorrupt, "orbit sizes do not sum to n!");
  return d;
}

std::vector<std::uint64_t> fixed_counts(const OrbitDecomposition& d) {
  std::vector<std::uint64_t> out(d.order, 0);
  for (std::uint64_t power = 0; power < d.order; ++power) {
    for (auto [size, count] : d.size_counts) {
      if (power % size == 0) out[power] += size * count;
    }
  }
  return out;
}

std::string orbit_signature(const OrbitDecomposition& d) {
  std::ostringstream os;
  bool first = true;
  for (auto [size, count] : d.size_counts) {
    if (!first) os << ',';
    os << size << ':' << count;
    first = false;
  }
  return os.str();
}

}  // namespace permsieve
