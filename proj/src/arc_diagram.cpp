#include "permsieve/arc_diagram.hpp"

#include <algorithm>

namespace permsieve {

ArcDiagram laguerre_encode(const Permutation& p) {
  const int n = p.size();
  const Permutation pos = inverse(p);
  ArcDiagram d;
  d.n = n;
  for (int i = 1; i < n; ++i) {
    if (p(i) < p(i + 1)) continue;
    Arc a;
    a.upper = p(i);
    a.lower = p(i + 1);
    for (int v = a.lower + 1; v < a.upper; ++v) a.sides.emplace_back(v, pos(v) < i ? Side::Left : Side::Right);
    d.arcs.push_back(std::move(a));
  }
  std::sort(d.arcs.begin(), d.arcs.end(), [](const Arc& x, const Arc& y) { return x.upper < y.upper; });
  return d;
}

ArcDiagram laguerre_reflect(const ArcDiagram& d) {
  ArcDiagram r = d;
  for (auto& a : r.arcs) {
    for (auto& [v, side] : a.sides) side = side == Side::Left ? Side::Right : Side::Left;
  }
  return r;
}

namespace {

struct Search {
  const ArcDiagram& target;
  const std::vector<std::vector<int>>& runs;
  const std::vector<std::vector<int>>& before;  // before[r]: runs that must precede r
  std::vector<int> order;
  std::vector<bool> used;

  bool extend() {
    const std::size_t k = runs.size();
    if (order.size() == k) {
      std::vector<int> word;
      for (int r : order) word.insert(word.end(), runs[r].begin(), runs[r].end());
      return laguerre_encode(make_unchecked(word)) == target;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (used[r]) continue;
      if (!order.empty() && runs[order.back()].back() > runs[r].front()) continue;
      bool ready = true;
      for (int b : before[r]) ready = ready && used[b];
      if (!ready) continue;
      used[r] = true;
      order.push_back(static_cast<int>(r));
      if (extend()) return true;
      order.pop_back();
      used[r] = false;
    }
    return false;
  }
};

}  // namespace

Permutation laguerre_reconstruct(const ArcDiagram& d) {
  const int n = d.n;
  if (n < 1) throw Error(Errc::EmptyInput, "empty diagram");
  std::vector<int> next(n + 1, 0), has_prev(n + 1, 0);
  for (const auto& a : d.arcs) {
    if (a.upper <= a.lower || a.upper > n || a.lower < 1 || next[a.upper] || has_prev[a.lower]) {
      throw Error(Errc::NoPreimage, "arcs do not chain into decreasing runs");
    }
    next[a.upper] = a.lower;
    has_prev[a.lower] = 1;
  }
  // Runs are listed by their first (largest) value, ascending.
  std::vector<std::vector<int>> runs;
  std::vector<int> run_of(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    if (has_prev[v]) continue;
    std::vector<int> run;
    for (int x = v; x != 0; x = next[x]) {
      run_of[x] = static_cast<int>(runs.size());
      run.push_back(x);
    }
    runs.push_back(std::move(run));
  }
  if (std::count(run_of.begin() + 1, run_of.end(), -1) != 0) throw Error(Errc::NoPreimage, "arcs form a cycle");

  std::vector<std::vector<int>> before(runs.size());
  for (const auto& a : d.arcs) {
    const int r = run_of[a.upper];
    for (const auto& [v, side] : a.sides) {
      const int s = run_of[v];
      if (s == r) throw Error(Errc::NoPreimage, "value nested inside its own run");
      if (side == Side::Left) before[r].push_back(s);
      else before[s].push_back(r);
    }
  }
  Search search{d, runs, before, {}, std::vector<bool>(runs.size(), false)};
  if (!search.extend()) throw Error(Errc::NoPreimage, "no ordering of runs matches the diagram");
  std::vector<int> word;
  for (int r : search.order) word.insert(word.end(), runs[r].begin(), runs[r].end());
  return make_unchecked(std::move(word));
}

Permutation invert_laguerre_heap(const Permutation& p) {
  return laguerre_reconstruct(laguerre_reflect(laguerre_encode(p)));
}

}  // namespace permsieve
