#pragma once

#include <string_view>

#include "permsieve/permutation.hpp"

namespace permsieve {

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
/// sigma_2 ... sigma_n sigma_1.
Permutation rotation(const Permutation& p);
/// c o p o c^-1 with c = (1 2 ... n).
Permutation conj_long_cycle(const Permutation& p);
/// Adds one to every Lehmer code entry, modulo n + 1 - i.
Permutation lehmer_code_rotation(const Permutation& p);

enum class ToricOrder { Forward, Backward };
/// Applies the guarded value swaps tau_{1,2}, tau_{2,3}, ..., tau_{n,1} in
/// turn (Forward) or the same list reversed (Backward). A stage swaps values
/// i and j only if they are not adjacent in the current word.
Permutation toric_promotion(const Permutation& p, ToricOrder order = ToricOrder::Forward);

/// Foata-Zeilberger path, complemented, decoded.
Permutation corteel(const Permutation& p);

/// Swap positions i, i+1 for the smallest odd i that keeps the set of
/// right-to-left minima; the identity if there is none.
Permutation alexandersson_kebede(const Permutation& p);

/// Take the largest j that is the middle letter of a 321 or 312 occurrence
/// and swap sigma_j with the unique later entry below the prefix maximum.
Permutation psi_3star(const Permutation& p);

/// Recursive involution pairing permutations whose 32-1 counts differ by one.
Permutation psi_32_1(const Permutation& p);

/// Blocks of two positions (position 1 alone when n is odd); swaps the values
/// i, i+1 of the largest pair not sitting in its own block.
Permutation psi_block(const Permutation& p);

enum class PositionSwap { LastTwo, FirstThird, ReversePrefix3, FirstLast, FirstTwo, SecondThird };
/// Exchanges two fixed positions. The identity when n is too small to have them.
Permutation position_swap(const Permutation& p, PositionSwap which);

}  // namespace permsieve
