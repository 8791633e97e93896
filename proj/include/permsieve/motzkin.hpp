#pragma once

#include <string>
#include <vector>

#include "permsieve/permutation.hpp"

namespace permsieve {

/// Steps: 'u' up, 'd' down, 'r' and 'b' level. heights[i] is the height of
/// the lower endpoint of step i.
struct ColoredMotzkinPath {
  std::string word;
  std::vector<int> weights;
  std::vector<int> heights;

  friend bool operator==(const ColoredMotzkinPath&, const ColoredMotzkinPath&) = default;
};

/// Heights implied by a word; throws NoPreimage if the path dips below zero
/// or does not return to it.
std::vector<int> path_heights(const std::string& word);

/// Checks the height and weight bounds; throws WeightOutOfRange.
void validate_path(const ColoredMotzkinPath& m);

ColoredMotzkinPath fz_encode(const Permutation& p);
Permutation fz_decode(const ColoredMotzkinPath& m);
ColoredMotzkinPath motzkin_complement(const ColoredMotzkinPath& m);

}  // namespace permsieve
