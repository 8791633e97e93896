#include "permsieve/stat_registry.hpp"

#include <algorithm>

#include "permsieve/generating_functions.hpp"
#include "permsieve/statistics.hpp"

namespace permsieve {

namespace {

using Eval = std::function<std::int64_t(const Permutation&)>;

StatDescriptor make(std::string key, std::optional<int> id, std::string name, std::string family, Eval eval,
                    int min_n = 1, bool may_be_negative = false) {
  StatDescriptor d;
  d.key = std::move(key);
  d.findstat_id = id;
  d.name = std::move(name);
  d.family = std::move(family);
  d.eval = std::move(eval);
  d.min_n = min_n;
  d.may_be_negative = may_be_negative;
  return d;
}

Eval pattern_sum(std::vector<std::string> patterns) {
  std::vector<PatternSpec> specs;
  for (const auto& s : patterns) specs.push_back(PatternSpec::vincular(s));
  return [specs](const Permutation& p) -> std::int64_t {
    std::int64_t total = 0;
    for (const auto& s : specs) total += pattern_count(p, s);
    return total;
  };
}

int upper_middle_index(int n) { return n / 2 + 1; }
int lower_middle_index(int n) { return (n + 1) / 2; }

std::vector<StatDescriptor> build() {
  std::vector<StatDescriptor> r;
  // Classical pattern: a dash between every pair of letters.
  const auto c = [](std::string w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back('-');
      out.push_back(w[i]);
    }
    return out;
  };

  r.push_back(make("st004", 4, "major index", "mahonian", [](const Permutation& p) { return maj(p); }));
  r.push_back(make("st018", 18, "number of inversions", "mahonian", [](const Permutation& p) { return inv(p); }));
  r.push_back(make("st833", 833, "comajor index", "mahonian", [](const Permutation& p) { return comaj(p); }));
  r.push_back(make("st021", 21, "number of descents", "width-descents", [](const Permutation& p) { return des(p); }));
  r.push_back(make("st836", 836, "number of descents of distance 2", "width-descents",
                   [](const Permutation& p) { return width_descents(p, 2); }, 3));
  r.push_back(make("st1520", 1520, "number of strict 3-descents", "width-descents",
                   [](const Permutation& p) { return width_descents(p, 3); }, 4));

  r.push_back(make("st039", 39, "number of crossings", "crossings", [](const Permutation& p) { return crossings(p); }));
  r.push_back(make("st223", 223, "number of nestings", "crossings", [](const Permutation& p) { return nestings(p); }));
  r.push_back(make("st356", 356, "occurrences of 13-2", "crossings", pattern_sum({"13-2"})));
  r.push_back(make("st358", 358, "occurrences of 31-2", "crossings", pattern_sum({"31-2"})));
  r.push_back(make("st360", 360, "occurrences of 32-1", "vincular", pattern_sum({"32-1"})));
  r.push_back(make("st357", 357, "occurrences of 12-3", "vincular", pattern_sum({"12-3"})));
  r.push_back(make("st317", 317, "cycle descent number", "cycle-descents",
                   [](const Permutation& p) { return cycle_descents(p); }));
  r.push_back(make("st1744", 1744, "occurrences of the 12 arrow pattern", "cycle-descents",
                   [](const Permutation& p) { return arrow12_count(p); }));

  r.push_back(make("st371", 371, "midpoints of decreasing length-3 subsequences", "midpoints",
                   [](const Permutation& p) { return midpoint_stat(p, Midpoint::DecreasingMid); }));
  r.push_back(make("st372", 372, "midpoints of increasing length-3 subsequences", "midpoints",
                   [](const Permutation& p) { return midpoint_stat(p, Midpoint::IncreasingMid); }));
  r.push_back(make("st1683", 1683, "positions of the 3 in a 132 occurrence", "midpoints",
                   [](const Permutation& p) { return midpoint_stat(p, Midpoint::ThreeOf132); }));
  r.push_back(make("st1687", 1687, "positions of the 2 in a 213 occurrence", "midpoints",
                   [](const Permutation& p) { return midpoint_stat(p, Midpoint::TwoOf213); }));
  r.push_back(make("st373", 373, "weak excedances that are decreasing midpoints", "midpoints",
                   [](const Permutation& p) { return midpoint_stat(p, Midpoint::WeakExcedanceDecreasingMid); }));

  r.push_back(make("st1004", 1004, "indices that are left-to-right maxima or right-to-left minima", "extrema",
                   [](const Permutation& p) { return extrema_union(p); }));
  r.push_back(make("st1005", 1005, "indices that are left-to-right maxima or right-to-left minima, not both",
                   "extrema", [](const Permutation& p) { return extrema_symmetric_difference(p); }));
  r.push_back(make("l2rmax_plus_r2lmin", std::nullopt, "left-to-right maxima plus right-to-left minima", "extrema",
                   [](const Permutation& p) { return extrema_sum(p); }));
  r.push_back(make("st007", 7, "number of right-to-left maxima", "cycles-like",
                   [](const Permutation& p) { return count_true(right_to_left_maxima(p)); }));
  r.push_back(make("st314", 314, "number of left-to-right maxima", "cycles-like",
                   [](const Permutation& p) { return count_true(left_to_right_maxima(p)); }));
  r.push_back(make("st542", 542, "number of left-to-right minima", "cycles-like",
                   [](const Permutation& p) { return count_true(left_to_right_minima(p)); }));
  r.push_back(make("st991", 991, "number of right-to-left minima", "cycles-like",
                   [](const Permutation& p) { return count_true(right_to_left_minima(p)); }));
  r.push_back(make("st031", 31, "number of cycles", "cycles-like", [](const Permutation& p) { return cycle_count(p); }));
  r.push_back(make("st541", 541, "values at least 2 with every smaller value to the right", "cycles-like",
                   [](const Permutation& p) { return count_true(left_to_right_minima(p)) - 1; }));
  r.push_back(make("st216", 216, "absolute length", "cycles-like",
                   [](const Permutation& p) { return p.size() - cycle_count(p); }));
  r.push_back(make("st316", 316, "number of non-left-to-right-maxima", "cycles-like",
                   [](const Permutation& p) { return p.size() - count_true(left_to_right_maxima(p)); }));

  {
    StatDescriptor d = make("st864", 864, "circled entries of the shifted recording tableau", "shifted", nullptr);
    d.closed_gf = [](int n) { return shifted_circled_gf(n); };
    r.push_back(std::move(d));
  }

  r.push_back(make("st495", 495, "inversions of distance at most 2", "inversions",
                   [](const Permutation& p) { return inversions_within_distance(p, 2); }));
  r.push_back(make("st494", 494, "inversions of distance at most 3", "inversions",
                   [](const Permutation& p) { return inversions_within_distance(p, 3); }));
  r.push_back(make("st538", 538, "number of even inversions", "inversions",
                   [](const Permutation& p) { return even_inversions(p); }));
  r.push_back(make("st539", 539, "number of odd inversions", "inversions",
                   [](const Permutation& p) { return odd_inversions(p); }));
  r.push_back(make("st1726", 1726, "number of visible inversions", "inversions",
                   [](const Permutation& p) { return visible_inversions(p); }));
  r.push_back(make("st1727", 1727, "number of invisible inversions", "inversions",
                   [](const Permutation& p) { return invisible_inversions(p); }));

  r.push_back(make("st483", 483, "changes between increasing and decreasing", "runs",
                   [](const Permutation& p) { return direction_changes(p); }));
  r.push_back(make("st638", 638, "number of up-down runs", "runs", [](const Permutation& p) { return up_down_runs(p); }));
  r.push_back(make("st1114", 1114, "number of odd descents", "runs", [](const Permutation& p) { return odd_descents(p); }));
  r.push_back(make("st1115", 1115, "number of even descents", "runs",
                   [](const Permutation& p) { return even_descents(p); }));
  r.push_back(make("st677", 677, "bi-alternating inversion number", "runs",
                   [](const Permutation& p) { return bialternating(p); }));

  r.push_back(make("st809", 809, "reduced reflection length", "sorting",
                   [](const Permutation& p) { return reduced_reflection_length(p); }));
  r.push_back(make("st1579", 1579, "cyclically simple transpositions needed to sort", "sorting",
                   [](const Permutation& p) { return cyclic_bubble_swaps(p); }));
  r.push_back(make("st1076", 1076, "factorization length into cyclic shifts of (12)", "sorting",
                   [](const Permutation& p) { return cyclic_transposition_distance(p); }));
  r.push_back(make("st1077", 1077, "prefix exchange distance", "sorting",
                   [](const Permutation& p) { return prefix_exchange_distance(p); }));

  r.push_back(make("st436", 436, "occurrences of 231 or 321", "patterns", pattern_sum({c("231"), c("321")})));
  r.push_back(make("st423", 423, "occurrences of 123 or 132", "patterns", pattern_sum({c("123"), c("132")})));
  r.push_back(make("st428", 428, "occurrences of 123 or 213", "patterns", pattern_sum({c("123"), c("213")})));
  r.push_back(make("st437", 437, "occurrences of 312 or 321", "patterns", pattern_sum({c("312"), c("321")})));

  r.push_back(make("st020", 20, "rank", "entries", [](const Permutation& p) { return rank(p); }));
  r.push_back(make("st054", 54, "first entry", "entries", [](const Permutation& p) { return entry(p, 1); }));
  r.push_back(make("st740", 740, "last entry", "entries", [](const Permutation& p) { return entry(p, p.size()); }));
  r.push_back(make("st1806", 1806, "upper middle entry", "entries",
                   [](const Permutation& p) { return entry(p, upper_middle_index(p.size())); }));
  r.push_back(make("st1807", 1807, "lower middle entry", "entries",
                   [](const Permutation& p) { return entry(p, lower_middle_index(p.size())); }));
  r.push_back(make("st1557", 1557, "inversions of the second entry", "entries",
                   [](const Permutation& p) { return entry_inversions(p, 2); }, 2));
  r.push_back(make("st1556", 1556, "inversions of the third entry", "entries",
                   [](const Permutation& p) { return entry_inversions(p, 3); }, 3));
  r.push_back(make("st1911", 1911, "descent variant minus inversions", "entries",
                   [](const Permutation& p) { return descent_variant_minus_inv(p); }, 1, true));

  r.push_back(make("st825", 825, "major index plus inverse major index", "long-cycle",
                   [](const Permutation& p) { return maj(p) + imaj(p); }));
  r.push_back(make("st1379", 1379, "inversions plus major index", "long-cycle",
                   [](const Permutation& p) { return inv(p) + maj(p); }));
  r.push_back(make("st1377", 1377, "major index minus inversions", "long-cycle",
                   [](const Permutation& p) { return maj(p) - inv(p); }, 1, true));
  r.push_back(make("maj_minus_imaj", std::nullopt, "major index minus inverse major index", "long-cycle",
                   [](const Permutation& p) { return maj(p) - imaj(p); }, 1, true));
  r.push_back(make("st462", 462, "major index minus excedances", "long-cycle",
                   [](const Permutation& p) { return maj(p) - strict_excedances(p); }, 1, true));
  r.push_back(make("st463", 463, "admissible inversions (Lin-Zeng)", "long-cycle",
                   [](const Permutation& p) { return admissible_inversions_lz(p); }));
  r.push_back(make("st866", 866, "admissible inversions (Shareshian-Wachs)", "long-cycle",
                   [](const Permutation& p) { return admissible_inversions_sw(p); }));
  r.push_back(make("st961", 961, "shifted major index", "long-cycle",
                   [](const Permutation& p) { return shifted_major(p); }));

  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return r;
}

}  // namespace

const std::vector<StatDescriptor>& stat_registry() {
  static const std::vector<StatDescriptor> registry = build();
  return registry;
}

const StatDescriptor& find_stat(std::string_view key) {
  const auto& r = stat_registry();
  auto it = std::lower_bound(r.begin(), r.end(), key, [](const auto& d, std::string_view k) { return d.key < k; });
  if (it == r.end() || it->key != key) throw Error(Errc::UnknownKey, "no statistic '" + std::string(key) + "'");
  return *it;
}

std::int64_t evaluate(const StatDescriptor& stat, const Permutation& p) {
  if (!stat.eval) throw Error(Errc::InvalidArgument, stat.key + " has no per-permutation evaluator");
  if (!stat.defined_at(p.size())) {
    throw Error(Errc::WidthOutOfRange, stat.key + " is undefined for n = " + std::to_string(p.size()));
  }
  return stat.eval(p);
}

}  // namespace permsieve
