#include <doctest.h>

#include "permsieve/bijections.hpp"
#include "permsieve/csp.hpp"
#include "permsieve/generating_functions.hpp"
#include "permsieve/orbits.hpp"
#include "permsieve/statistics.hpp"

using namespace permsieve;

namespace {

const OrbitDecomposition orbits(const char* map, int n) { return decompose(find_map(map), n); }

}  // namespace

TEST_CASE("orbit decompositions") {
  CHECK(orbit_signature(orbits("reverse", 4)) == "2:12");
  CHECK(orbit_signature(orbits("lehmer_code_rotation", 4)) == "12:2");
  CHECK(orbit_signature(orbits("lehmer_code_rotation", 3)) == "6:1");
  CHECK(orbit_signature(orbits("toric_promotion", 4)) == "3:8");
  CHECK(fixed_counts(orbits("corteel", 5)).at(1) == 16);
  CHECK(fixed_counts(orbits("alexandersson_kebede", 6)) == std::vector<std::uint64_t>{720, 8});
  CHECK(fixed_counts(orbits("reverse", 4)) == std::vector<std::uint64_t>{24, 0});
  CHECK(orbit_signature(orbits("reverse", 5)) == orbit_signature(orbits("complement", 5)));
  CHECK(orbit_signature(orbits("corteel", 5)) == orbit_signature(orbits("invert_laguerre_heap", 5)));
  CHECK(orbit_signature(orbits("rotation", 4)) != orbit_signature(orbits("toric_promotion", 4)));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : map_registry()) {
      const auto d = decompose(m, n);
      CHECK(d.total() == factorial(n));
      for (const auto& [size, count] : d.size_counts) CHECK(d.order % size == 0);
      // Seeds are lex-least within their orbit.
      for (const auto& o : d.orbits) CHECK(*std::min_element(o.begin(), o.end()) == o.front());
    }
  }
  CHECK_THROWS_AS(decomposition_from_sizes(3, {{2, 2}}), Error);
}

TEST_CASE("orbit polynomials") {
  CHECK(orbit_polynomial(orbits("reverse", 4)) == IntPolynomial::from_coeffs({12, 12}));
  CHECK(orbit_polynomial(orbits("corteel", 4)) == IntPolynomial::from_coeffs({16, 8}));
  CHECK(orbit_polynomial(orbits("lehmer_code_rotation", 3)) == IntPolynomial::q_integer(6));
}

TEST_CASE("verdicts") {
  const CspVerdict crossings = csp_check(find_stat("st039"), find_map("corteel"), 5);
  CHECK(crossings.holds);
  CHECK(crossings.table.size() == 2);
  CHECK(crossings.table[0].fixed == 120);
  CHECK(crossings.table[1].fixed == 16);
  const CspVerdict rot = csp_check(find_stat("st018"), find_map("rotation"), 4);
  CHECK(rot.holds);
  std::vector<std::uint64_t> fixed;
  for (const auto& row : rot.table) fixed.push_back(row.fixed);
  CHECK(fixed == std::vector<std::uint64_t>{24, 0, 0, 0});
  for (const auto& row : rot.table) CHECK(row.agrees);
  const CspVerdict odd = csp_check(find_stat("st539"), find_map("reverse"), 4);
  CHECK_FALSE(odd.holds);
  CHECK_FALSE(odd.witnesses.empty());
  // n = 1: every pair holds trivially.
  for (const auto& s : stat_registry()) {
    if (!s.defined_at(1)) continue;
    for (const auto& m : map_registry()) CHECK(csp_check(s, m, 1).holds);
  }
}

TEST_CASE("verdict agrees with brute-force root evaluation") {
  for (const char* s : {"st018", "st004", "st021", "st039", "st1377"}) {
    for (const char* m : {"rotation", "reverse", "corteel", "conj_long_cycle"}) {
      for (int n = 3; n <= 6; ++n) {
        const CspVerdict v = csp_check(find_stat(s), find_map(m), n);
        bool numeric = true;
        for (const auto& row : v.table) numeric = numeric && row.agrees;
        CHECK(v.holds == numeric);
      }
    }
  }
}

TEST_CASE("distribution comparisons") {
  CHECK(equidistribution(find_stat("st039"), find_stat("st223"), 6));
  CHECK(equidistribution(find_stat("st317"), find_stat("st1744"), 6));
  CHECK_FALSE(equidistribution(find_stat("st538"), find_stat("st539"), 4));
  const auto& s1744 = find_stat("st1744");
  const auto& s317 = find_stat("st317");
  const auto& s356 = find_stat("st356");
  const auto& s358 = find_stat("st358");
  const auto& s018 = find_stat("st018");
  for (int n = 1; n <= 6; ++n) {
    CHECK(transport_check(s1744, s317, [](const Permutation& p) { return inverse(fundamental_transform(p)); }, n));
    CHECK(transport_check(s356, s358, [](const Permutation& p) { return complement(p); }, n));
    CHECK(transport_check(s018, s018, [](const Permutation& p) { return p; }, n));
  }
}

TEST_CASE("parity pairings") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(parity_pairing_check(find_stat("st371"), find_map("psi_3star"), 0, n));
    CHECK(parity_pairing_check(find_stat("st360"), find_map("psi_32_1"), 0, n));
    CHECK(parity_pairing_check(find_stat("st1727"), find_map("psi_block"), 0, n));
  }
  CHECK_THROWS_AS(parity_pairing_check(find_stat("st018"), find_map("rotation"), 0, 4), Error);
}
