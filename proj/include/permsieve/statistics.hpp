#pragma once

#include <cstdint>
#include <vector>

#include "permsieve/permutation.hpp"

namespace permsieve {

// Per-permutation statistics. Each is a pure function of the one-line word.

/// A classical or vincular pattern. adjacent[t] requires letters t and t+1 of
/// an occurrence to sit in consecutive positions, so 32-1 is {3,2,1} with
/// adjacent = {true, false}.
struct PatternSpec {
  std::vector<int> pattern;
  std::vector<bool> adjacent;

  static PatternSpec classical(std::vector<int> pattern);
  /// Parses "13-2" style notation; letters without a dash between them are adjacent.
  static PatternSpec vincular(std::string_view text);
};

int pattern_count(const Permutation& p, const PatternSpec& spec);

int inv(const Permutation& p);
int maj(const Permutation& p);
int comaj(const Permutation& p);
int des(const Permutation& p);
std::vector<int> descent_set(const Permutation& p);

int crossings(const Permutation& p);
int nestings(const Permutation& p);
int cycle_descents(const Permutation& p);
int arrow12_count(const Permutation& p);

enum class Midpoint { DecreasingMid, IncreasingMid, ThreeOf132, TwoOf213, WeakExcedanceDecreasingMid };
int midpoint_stat(const Permutation& p, Midpoint which);

std::vector<bool> left_to_right_maxima(const Permutation& p);
std::vector<bool> left_to_right_minima(const Permutation& p);
std::vector<bool> right_to_left_maxima(const Permutation& p);
std::vector<bool> right_to_left_minima(const Permutation& p);
int count_true(const std::vector<bool>& v);

/// Indices that are a left-to-right maximum or a right-to-left minimum.
int extrema_union(const Permutation& p);
/// Same, but not both.
int extrema_symmetric_difference(const Permutation& p);
int extrema_sum(const Permutation& p);

/// Inversions (i, i+m) with 1 <= m <= k.
int inversions_within_distance(const Permutation& p, int k);
int even_inversions(const Permutation& p);
int odd_inversions(const Permutation& p);
int visible_inversions(const Permutation& p);
int invisible_inversions(const Permutation& p);

/// #{i : sigma_i > sigma_(i+k)}. Throws WidthOutOfRange when k >= n, except
/// that k = 1 is the ordinary descent count and is defined for every n.
int width_descents(const Permutation& p, int k);
int odd_descents(const Permutation& p);
int even_descents(const Permutation& p);
int direction_changes(const Permutation& p);
int up_down_runs(const Permutation& p);

int bialternating(const Permutation& p);

int reduced_reflection_length(const Permutation& p);
int cyclic_bubble_swaps(const Permutation& p);
/// Word length with generators (a, a+1) for a < n together with (n, 1).
int cyclic_transposition_distance(const Permutation& p);
/// Word length with generators (1, a) for 2 <= a <= n.
int prefix_exchange_distance(const Permutation& p);

/// sigma_i, 1-based; throws IndexOutOfRange.
int entry(const Permutation& p, int i);
/// L(sigma)_i, the number of later smaller entries.
int entry_inversions(const Permutation& p, int i);
/// 1 + lexicographic rank.
std::int64_t rank(const Permutation& p);

int imaj(const Permutation& p);
int strict_excedances(const Permutation& p);
int weak_excedances(const Permutation& p);
int admissible_inversions_lz(const Permutation& p);
int admissible_inversions_sw(const Permutation& p);
int shifted_major(const Permutation& p);
int descent_variant_minus_inv(const Permutation& p);

}  // namespace permsieve
