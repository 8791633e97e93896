#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permsieve/error.hpp"

namespace permsieve {

/// A permutation of [n] in one-line notation. Values are 1-based; position
/// arguments to operator() are 1-based as well, so p(i) reads sigma(i).
class Permutation {
 public:
  /// Validates that `entries` is a rearrangement of 1..n with n >= 1.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator()(int position) const noexcept { return entries_[position - 1]; }
  std::span<const int> entries() const noexcept { return entries_; }

  bool is_identity() const noexcept;

  /// Digit word for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> entries) : entries_(std::move(entries)) {}
  friend Permutation make_unchecked(std::vector<int> entries);

  std::vector<int> entries_;
};

/// Internal fast path: the caller guarantees `entries` is a permutation.
Permutation make_unchecked(std::vector<int> entries);

/// Accepts a digit word ("2431", only for n <= 9) or comma-separated integers.
Permutation parse_permutation(std::string_view text);

Permutation inverse(const Permutation& p);

/// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

enum class CycleOrder { SmallestFirst, LargestFirst, AsProduced };

struct CycleForm {
  std::vector<std::vector<int>> cycles;
  CycleOrder order = CycleOrder::SmallestFirst;

  std::string to_string() const;
};

/// SmallestFirst: each cycle starts at its minimum, cycles sorted by minimum.
/// LargestFirst: each cycle starts at its maximum, cycles sorted by maximum.
/// AsProduced: orbits traced from the smallest unvisited point, unrotated.
CycleForm cycle_form(const Permutation& p, CycleOrder order = CycleOrder::SmallestFirst);

/// Builds the permutation whose cycles are given (each cycle a -> next -> ...).
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

int cycle_count(const Permutation& p);

struct LehmerCode {
  std::vector<int> code;
  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;
};

LehmerCode lehmer_code(const Permutation& p);
Permutation lehmer_decode(const LehmerCode& c);

/// Cut the one-line word before each left-to-right maximum and read the
/// blocks as cycles.
Permutation fundamental_transform(const Permutation& p);
Permutation fundamental_inverse(const Permutation& p);

// Ranking in lexicographic order, 0-based: rank 0 is the identity.
std::uint64_t factorial(int n);
std::uint64_t lex_rank(std::span<const int> entries);
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(int n, std::uint64_t rank);

/// Calls fn for every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Same, restricted to lex ranks [first, last).
void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> all_permutations(int n);

}  // namespace permsieve
