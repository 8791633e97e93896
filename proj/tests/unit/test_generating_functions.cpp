#include <doctest.h>

#include <numeric>

#include "permsieve/csp.hpp"
#include "permsieve/generating_functions.hpp"
#include "permsieve/stat_registry.hpp"
#include "permsieve/statistics.hpp"

using namespace permsieve;

namespace {

// Schur's product formula for standard shifted tableaux, as an oracle for
// the corner-removal recursion.
std::int64_t schur_count(const std::vector<int>& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  long double value = static_cast<long double>(factorial(n));
  for (int part : lambda) value /= static_cast<long double>(factorial(part));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      value *= static_cast<long double>(lambda[i] - lambda[j]) / (lambda[i] + lambda[j]);
  return static_cast<std::int64_t>(value + 0.5L);
}

}  // namespace

TEST_CASE("mahonian and cycles") {
  CHECK(mahonian_gf(3) == IntPolynomial::from_coeffs({1, 2, 2, 1}));
  CHECK(cycles_gf(4).eval(-1) == 0);
  CHECK(cycles_gf(4).eval(1) == 24);
  for (int n = 1; n <= 6; ++n) {
    CHECK(generating_function(find_stat("st018"), n) == mahonian_gf(n));
    CHECK(generating_function(find_stat("st031"), n) == cycles_gf(n));
  }
}

TEST_CASE("crossings closed form") {
  for (int n = 4; n <= 8; ++n) {
    std::int64_t total = 0;
    for (int k = 1; k <= n; ++k) total += e_hat(k, n).eval(-1);
    CHECK(total == (std::int64_t{1} << (n - 1)));
  }
  for (int n = 1; n <= 7; ++n) CHECK(crossings_gf_closed(n) == generating_function(find_stat("st039"), n));
}

TEST_CASE("shifted tableaux") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lambda : strict_partitions(n)) CHECK(shifted_tableaux_count(lambda) == schur_count(lambda));
  }
  CHECK(shifted_tableaux_count({4}) == 1);
  CHECK(shifted_tableaux_count({3, 1}) == 2);
  const IntPolynomial one_plus_q = IntPolynomial::from_coeffs({1, 1});
  CHECK(shifted_circled_gf(4) == one_plus_q.pow(3) + IntPolynomial::constant(4) * one_plus_q.pow(2));
  for (int n = 1; n <= 9; ++n) CHECK(shifted_circled_gf(n).eval(1) == static_cast<std::int64_t>(factorial(n)));
  for (int n = 2; n <= 9; ++n) CHECK(shifted_circled_gf(n).eval(-1) == 0);
}

TEST_CASE("rank and entries") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(generating_function(find_stat("st020"), n) == rank_gf(n));
    CHECK(generating_function(find_stat("st054"), n) == entry_gf(n));
  }
}

TEST_CASE("fold and q = -1 examples") {
  CHECK(fold_mod_cyclic(mahonian_gf(4), 4) == IntPolynomial::from_coeffs({6, 6, 6, 6}));
  CHECK(fold_mod_cyclic(IntPolynomial::from_coeffs({0, 1, 0, 1}), 2) == IntPolynomial::from_coeffs({0, 2}));
  CHECK(q_minus_one(find_stat("st039"), 6) == 32);
  CHECK(q_minus_one(find_stat("l2rmax_plus_r2lmin"), 6) == 8);
  CHECK(q_minus_one(find_stat("st021"), 4) == 0);
  CHECK(q_minus_one(find_stat("st494"), 5) == 0);
  for (int n : {4, 6, 8}) CHECK(q_minus_one(find_stat("st494"), n) == 0);
}
