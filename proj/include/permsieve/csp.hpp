#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permsieve/map_registry.hpp"
#include "permsieve/orbits.hpp"
#include "permsieve/polynomial.hpp"
#include "permsieve/stat_registry.hpp"

namespace permsieve {

/// sum over S_n of q^stat. Enumeration is split into `workers` lex-rank
/// chunks; the sum is exact, so the result does not depend on the split.
IntPolynomial generating_function(const StatDescriptor& stat, int n, int workers = 1);

/// Exponents reduced mod c.
IntPolynomial fold_mod_cyclic(const IntPolynomial& f, int c);

/// sum over orbits O of sum_{i < |O|} q^(i * c / |O|); its value at zeta^d is
/// the number of points fixed by g^d.
IntPolynomial orbit_polynomial(const OrbitDecomposition& d);

struct CspRow {
  std::uint64_t d = 0;
  std::uint64_t fixed = 0;
  long double value_re = 0;
  long double value_im = 0;
  bool agrees = false;
};

struct CspVerdict {
  int n = 0;
  std::uint64_t order = 1;
  bool holds = false;
  std::vector<CspRow> table;
  IntPolynomial gf;
  IntPolynomial residue_f;
  IntPolynomial residue_t;
  /// Powers d where the floating evaluation disagrees with the fixed count.
  std::vector<std::uint64_t> witnesses;
  std::string signature;
  /// For statistics taking negative values: the minimum exponent, and
  /// whether folding q^(stat - min) instead gives the same verdict.
  int shift_used = 0;
  bool shift_consistent = true;
};

CspVerdict csp_check(const IntPolynomial& gf, const OrbitDecomposition& orbits);
CspVerdict csp_check(const StatDescriptor& stat, const MapDescriptor& map, int n);

std::int64_t q_minus_one(const StatDescriptor& stat, int n);

bool equidistribution(const StatDescriptor& a, const StatDescriptor& b, int n);

/// statB(phi(sigma)) == statA(sigma) for every sigma in S_n.
bool transport_check(const StatDescriptor& a, const StatDescriptor& b,
                     const std::function<Permutation(const Permutation&)>& phi, int n);

/// Fixed points all have the parity of expected_fixed_value and every
/// 2-orbit joins opposite parities. Throws NotAnInvolution.
bool parity_pairing_check(const StatDescriptor& stat, const MapDescriptor& involution,
                          std::int64_t expected_fixed_value, int n);

}  // namespace permsieve
