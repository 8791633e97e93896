#include "permsieve/statistics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace permsieve {

PatternSpec PatternSpec::classical(std::vector<int> pattern) {
  PatternSpec s;
  s.adjacent.assign(pattern.empty() ? 0 : pattern.size() - 1, false);
  s.pattern = std::move(pattern);
  return s;
}

PatternSpec PatternSpec::vincular(std::string_view text) {
  PatternSpec s;
  bool pending_dash = false;
  for (char c : text) {
    if (c == '-') {
      pending_dash = true;
      continue;
    }
    if (c < '1' || c > '9') throw Error(Errc::InvalidArgument, "bad pattern letter");
    if (!s.pattern.empty()) s.adjacent.push_back(!pending_dash);
    s.pattern.push_back(c - '0');
    pending_dash = false;
  }
  std::vector<int> sorted = s.pattern;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw Error(Errc::InvalidArgument, "pattern is not a permutation");
  }
  return s;
}

namespace {

int count_occurrences(std::span<const int> w, const PatternSpec& spec, std::vector<int>& chosen, int from) {
  const std::size_t k = spec.pattern.size();
  if (chosen.size() == k) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if ((w[chosen[a]] < w[chosen[b]]) != (spec.pattern[a] < spec.pattern[b])) return 0;
      }
    }
    return 1;
  }
  int total = 0;
  const int n = static_cast<int>(w.size());
  const std::size_t t = chosen.size();
  if (t > 0 && spec.adjacent[t - 1]) {
    if (from < n) {
      chosen.push_back(from);
      total += count_occurrences(w, spec, chosen, from + 1);
      chosen.pop_back();
    }
    return total;
  }
  for (int pos = from; pos < n; ++pos) {
    chosen.push_back(pos);
    total += count_occurrences(w, spec, chosen, pos + 1);
    chosen.pop_back();
  }
  return total;
}

}  // namespace

int pattern_count(const Permutation& p, const PatternSpec& spec) {
  if (spec.pattern.empty()) return 0;
  std::vector<int> chosen;
  return count_occurrences(p.entries(), spec, chosen, 0);
}

int inv(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) count += p(i) > p(j);
  }
  return count;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) d.push_back(i);
  }
  return d;
}

int maj(const Permutation& p) {
  int s = 0;
  for (int i : descent_set(p)) s += i;
  return s;
}

int comaj(const Permutation& p) {
  int s = 0;
  for (int i : descent_set(p)) s += p.size() - i;
  return s;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

int crossings(const Permutation& p) {
  int count = 0;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (i < j && j <= p(i) && p(i) < p(j)) ++count;
      else if (p(i) < p(j) && p(j) < i && i < j) ++count;
    }
  }
  return count;
}

int nestings(const Permutation& p) {
  int count = 0;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (j < i && i <= p(i) && p(i) < p(j)) ++count;
      else if (p(j) < p(i) && p(i) < i && i < j) ++count;
    }
  }
  return count;
}

int cycle_descents(const Permutation& p) {
  int count = 0;
  for (const auto& c : cycle_form(p, CycleOrder::SmallestFirst).cycles) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k) count += c[k] > c[k + 1];
  }
  return count;
}

int arrow12_count(const Permutation& p) {
  const Permutation f = fundamental_transform(p);
  int count = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) < p(i + 1) && f(p(i)) == p(i + 1)) ++count;
  }
  return count;
}

int midpoint_stat(const Permutation& p, Midpoint which) {
  const int n = p.size();
  int count = 0;
  for (int j = 1; j <= n; ++j) {
    bool hit = false;
    switch (which) {
      case Midpoint::DecreasingMid:
      case Midpoint::WeakExcedanceDecreasingMid:
      case Midpoint::IncreasingMid: {
        const bool dec = which != Midpoint::IncreasingMid;
        bool before = false, after = false;
        for (int i = 1; i < j; ++i) before |= dec ? p(i) > p(j) : p(i) < p(j);
        for (int k = j + 1; k <= n; ++k) after |= dec ? p(k) < p(j) : p(k) > p(j);
        hit = before && after;
        if (which == Midpoint::WeakExcedanceDecreasingMid) hit = hit && p(j) >= j;
        break;
      }
      case Midpoint::ThreeOf132:
        for (int i = 1; i < j && !hit; ++i) {
          for (int k = j + 1; k <= n && !hit; ++k) hit = p(i) < p(k) && p(k) < p(j);
        }
        break;
      case Midpoint::TwoOf213:
        // Here j plays the first letter of the occurrence.
        for (int a = j + 1; a <= n && !hit; ++a) {
          for (int b = a + 1; b <= n && !hit; ++b) hit = p(a) < p(j) && p(j) < p(b);
        }
        break;
    }
    count += hit;
  }
  return count;
}

std::vector<bool> left_to_right_maxima(const Permutation& p) {
  std::vector<bool> r(p.size());
  int best = 0;
  for (int i = 1; i <= p.size(); ++i) {
    r[i - 1] = p(i) > best;
    best = std::max(best, p(i));
  }
  return r;
}

std::vector<bool> left_to_right_minima(const Permutation& p) {
  std::vector<bool> r(p.size());
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    r[i - 1] = p(i) < best;
    best = std::min(best, p(i));
  }
  return r;
}

std::vector<bool> right_to_left_maxima(const Permutation& p) {
  std::vector<bool> r(p.size());
  int best = 0;
  for (int i = p.size(); i >= 1; --i) {
    r[i - 1] = p(i) > best;
    best = std::max(best, p(i));
  }
  return r;
}

std::vector<bool> right_to_left_minima(const Permutation& p) {
  std::vector<bool> r(p.size());
  int best = p.size() + 1;
  for (int i = p.size(); i >= 1; --i) {
    r[i - 1] = p(i) < best;
    best = std::min(best, p(i));
  }
  return r;
}

int count_true(const std::vector<bool>& v) { return static_cast<int>(std::count(v.begin(), v.end(), true)); }

int extrema_union(const Permutation& p) {
  auto a = left_to_right_maxima(p), b = right_to_left_minima(p);
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += a[i] || b[i];
  return c;
}

int extrema_symmetric_difference(const Permutation& p) {
  auto a = left_to_right_maxima(p), b = right_to_left_minima(p);
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += a[i] != b[i];
  return c;
}

int extrema_sum(const Permutation& p) {
  return count_true(left_to_right_maxima(p)) + count_true(right_to_left_minima(p));
}

int inversions_within_distance(const Permutation& p, int k) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= std::min(p.size(), i + k); ++j) c += p(i) > p(j);
  }
  return c;
}

int even_inversions(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 2; j <= p.size(); j += 2) c += p(i) > p(j);
  }
  return c;
}

int odd_inversions(const Permutation& p) { return inv(p) - even_inversions(p); }

int visible_inversions(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) c += p(j) <= std::min(i, p(i));
  }
  return c;
}

int invisible_inversions(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j) && p(j) > i;
  }
  return c;
}

int width_descents(const Permutation& p, int k) {
  if (k < 1 || (k > 1 && k >= p.size())) {
    throw Error(Errc::WidthOutOfRange, "width " + std::to_string(k) + " on n = " + std::to_string(p.size()));
  }
  int c = 0;
  for (int i = 1; i + k <= p.size(); ++i) c += p(i) > p(i + k);
  return c;
}

int odd_descents(const Permutation& p) {
  int c = 0;
  for (int i : descent_set(p)) c += i % 2 == 1;
  return c;
}

int even_descents(const Permutation& p) {
  int c = 0;
  for (int i : descent_set(p)) c += i % 2 == 0;
  return c;
}

int direction_changes(const Permutation& p) {
  int c = 0;
  for (int i = 2; i < p.size(); ++i) c += (p(i - 1) < p(i)) != (p(i) < p(i + 1));
  return c;
}

int up_down_runs(const Permutation& p) {
  if (p.size() == 1) return 1;
  return 1 + direction_changes(p) + (p(1) > p(2));
}

int bialternating(const Permutation& p) {
  const int n = p.size();
  int j = 0;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y < x; ++y) {
      const int sign = p(x) > p(y) ? 1 : -1;
      j += ((x + y) % 2 == 0) ? sign : -sign;
    }
  }
  const int total = j + (n / 2) * (n / 2);
  if (total % 2 != 0) throw Error(Errc::ParityViolation, "bi-alternating sum is odd for " + p.to_string());
  return total / 2;
}

int reduced_reflection_length(const Permutation& p) {
  int depth2 = 0;
  for (int i = 1; i <= p.size(); ++i) depth2 += std::max(p(i) - i, 0);
  return 2 * depth2 - inv(p);
}

int cyclic_bubble_swaps(const Permutation& p) {
  std::vector<int> w(p.entries().begin(), p.entries().end());
  const int n = p.size();
  auto sorted = [&] {
    for (int i = 0; i < n; ++i) {
      if (w[i] != i + 1) return false;
    }
    return true;
  };
  int swaps = 0;
  while (!sorted()) {
    // One pass: the wrap-around pair (n, 1) first, then (1, 2), ..., (n-1, n).
    for (int step = 0; step < n; ++step) {
      const int a = step == 0 ? n - 1 : step - 1;
      const int b = step == 0 ? 0 : step;
      if (a == b) continue;
      const bool out_of_order = step == 0 ? w[b] > w[a] : w[a] > w[b];
      if (out_of_order) {
        std::swap(w[a], w[b]);
        ++swaps;
        if (sorted()) return swaps;
      }
    }
  }
  return swaps;
}

namespace {

using DistanceTable = std::vector<std::uint8_t>;

std::shared_ptr<const DistanceTable> build_distances(int n, const std::vector<std::pair<int, int>>& gens) {
  const std::uint64_t total = factorial(n);
  auto table = std::make_shared<DistanceTable>(total, 0xFF);
  std::deque<std::uint64_t> queue;
  (*table)[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::uint64_t r = queue.front();
    queue.pop_front();
    const Permutation cur = lex_unrank(n, r);
    std::vector<int> w(cur.entries().begin(), cur.entries().end());
    for (auto [a, b] : gens) {
      std::swap(w[a], w[b]);
      const std::uint64_t nr = lex_rank(w);
      if ((*table)[nr] == 0xFF) {
        (*table)[nr] = static_cast<std::uint8_t>((*table)[r] + 1);
        queue.push_back(nr);
      }
      std::swap(w[a], w[b]);
    }
  }
  return table;
}

int table_distance(const Permutation& p, bool cyclic) {
  const int n = p.size();
  if (n == 1) return 0;
  if (n > 10) throw Error(Errc::InvalidArgument, "distance tables are limited to n <= 10");
  static std::mutex mu;
  static std::map<std::pair<bool, int>, std::shared_ptr<const DistanceTable>> tables;
  std::shared_ptr<const DistanceTable> table;
  {
    std::lock_guard lock(mu);
    auto it = tables.find({cyclic, n});
    if (it != tables.end()) table = it->second;
  }
  if (!table) {
    std::vector<std::pair<int, int>> gens;
    if (cyclic) {
      for (int a = 0; a + 1 < n; ++a) gens.emplace_back(a, a + 1);
      if (n > 2) gens.emplace_back(n - 1, 0);
    } else {
      for (int a = 1; a < n; ++a) gens.emplace_back(0, a);
    }
    auto built = build_distances(n, gens);
    std::lock_guard lock(mu);
    table = tables.emplace(std::make_pair(cyclic, n), built).first->second;
  }
  return (*table)[lex_rank(p)];
}

}  // namespace

int cyclic_transposition_distance(const Permutation& p) { return table_distance(p, true); }
int prefix_exchange_distance(const Permutation& p) { return table_distance(p, false); }

int entry(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) throw Error(Errc::IndexOutOfRange, "entry " + std::to_string(i));
  return p(i);
}

int entry_inversions(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) throw Error(Errc::IndexOutOfRange, "entry " + std::to_string(i));
  int c = 0;
  for (int j = i + 1; j <= p.size(); ++j) c += p(j) < p(i);
  return c;
}

std::int64_t rank(const Permutation& p) { return static_cast<std::int64_t>(lex_rank(p)) + 1; }

int imaj(const Permutation& p) { return maj(inverse(p)); }

int strict_excedances(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) > i;
  return c;
}

int weak_excedances(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) >= i;
  return c;
}

int admissible_inversions_lz(const Permutation& p) {
  const int n = p.size();
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) < p(j)) continue;
      bool ok = i > 1 && p(i - 1) < p(i);
      for (int k = i + 1; k < j && !ok; ++k) ok = p(i) < p(k);
      c += ok;
    }
  }
  return c;
}

int admissible_inversions_sw(const Permutation& p) {
  const int n = p.size();
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) < p(j)) continue;
      bool ok = j < n && p(j) < p(j + 1);
      for (int k = i + 1; k < j && !ok; ++k) ok = p(k) < p(j);
      c += ok;
    }
  }
  return c;
}

int shifted_major(const Permutation& p) {
  int s = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1) + 1) s += i;
  }
  return s;
}

int descent_variant_minus_inv(const Permutation& p) {
  int s = 0;
  for (int i : descent_set(p)) s += i * (p.size() - i);
  return s - inv(p);
}

}  // namespace permsieve
