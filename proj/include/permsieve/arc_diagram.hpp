#pragma once

#include <vector>

#include "permsieve/permutation.hpp"

namespace permsieve {

enum class Side { Left, Right };

/// One arc per descent inside a decreasing run, joining the values
/// upper > lower. `sides` lists every value strictly between them, ascending,
/// with the side of the arc it lies on.
struct Arc {
  int upper = 0;
  int lower = 0;
  std::vector<std::pair<int, Side>> sides;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  int n = 0;
  std::vector<Arc> arcs;  // sorted by upper endpoint

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

ArcDiagram laguerre_encode(const Permutation& p);
ArcDiagram laguerre_reflect(const ArcDiagram& d);
/// The permutation whose encoding is d; throws NoPreimage.
Permutation laguerre_reconstruct(const ArcDiagram& d);
Permutation invert_laguerre_heap(const Permutation& p);

}  // namespace permsieve
