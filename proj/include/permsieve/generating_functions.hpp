#pragma once

#include <cstdint>
#include <vector>

#include "permsieve/polynomial.hpp"

namespace permsieve {

// Closed-form generating functions over S_n.

/// [n]_q! = prod_{i=1..n} [i]_q.
IntPolynomial mahonian_gf(int n);
/// q * prod_{k=1..n-1} (q + k).
IntPolynomial cycles_gf(int n);
/// sum_{j=1..n!} q^j.
IntPolynomial rank_gf(int n);
/// (n-1)! * sum_{j=1..n} q^j.
IntPolynomial entry_gf(int n);
/// n!/(n-i+1) * sum_{j=0..n-i} q^j.
IntPolynomial inv_entry_gf(int n, int i);

/// Generating function of crossings over permutations with k weak excedances.
IntPolynomial e_hat(int k, int n);
/// sum_k e_hat(k, n).
IntPolynomial crossings_gf_closed(int n);

/// n * prod_{i=1..n-1} (1 - q^(i(n-1))) / (1 - q^i), expanded. Its value at
/// q = 1 is n(n-1)^(n-1), so it is not the generating function of the
/// statistic it is usually quoted for once n >= 3.
IntPolynomial stat1911_product_gf(int n);

/// Strict partitions of n, each in decreasing order.
std::vector<std::vector<int>> strict_partitions(int n);
/// Number of standard shifted tableaux of strict shape lambda.
std::int64_t shifted_tableaux_count(const std::vector<int>& lambda);
/// sum over strict lambda of n of (1+q)^(n - len(lambda)) * g_lambda^2.
IntPolynomial shifted_circled_gf(int n);

}  // namespace permsieve
