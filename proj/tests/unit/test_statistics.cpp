#include <doctest.h>

#include <map>
#include <queue>

#include "permsieve/csp.hpp"
#include "permsieve/stat_registry.hpp"
#include "permsieve/statistics.hpp"

using namespace permsieve;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::int64_t stat(const char* key, const char* perm) { return evaluate(find_stat(key), P(perm)); }

// Brute-force oracles written straight from the definitions.
int brute_inv(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j);
  return c;
}

int brute_maj(const Permutation& p) {
  int s = 0;
  for (int i = 1; i < p.size(); ++i) s += p(i) > p(i + 1) ? i : 0;
  return s;
}

int brute_crossings(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j <= p.size(); ++j) {
      if (i < j && j <= p(i) && p(i) < p(j)) ++c;
      if (i > j && j > p(i) && p(i) > p(j)) ++c;
    }
  }
  return c;
}

// Smallest total cost of a factorization into transpositions (i j), cost j - i.
std::map<std::vector<int>, int> depth_table(int n) {
  std::map<std::vector<int>, int> dist;
  using Item = std::pair<int, std::vector<int>>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  pq.push({0, id});
  while (!pq.empty()) {
    auto [d, w] = pq.top();
    pq.pop();
    if (dist.count(w)) continue;
    dist[w] = d;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto v = w;
        std::swap(v[i], v[j]);
        if (!dist.count(v)) pq.push({d + j - i, v});
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("basic statistics") {
  CHECK(inv(P("53142")) == 7);
  CHECK(des(P("53142")) == 3);
  CHECK(descent_set(P("53142")) == std::vector<int>{1, 2, 4});
  CHECK(maj(P("53142")) == 7);
  for_each_permutation(6, [](const Permutation& p) {
    CHECK(inv(p) == brute_inv(p));
    CHECK(maj(p) == brute_maj(p));
    CHECK(crossings(p) == brute_crossings(p));
  });
  CHECK(crossings(P("231")) == 1);
  CHECK(nestings(P("1,7,6,3,8,10,9,12,2,11,4,5")) == 4);
  CHECK(nestings(Permutation::identity(5)) == 0);
}

TEST_CASE("descent gf on S_3") {
  CHECK(generating_function(find_stat("st021"), 3) == IntPolynomial::from_coeffs({1, 4, 1}));
}

TEST_CASE("patterns") {
  CHECK(pattern_count(Permutation::identity(5), PatternSpec::classical({3, 2, 1})) == 0);
  CHECK(pattern_count(P("321"), PatternSpec::classical({3, 2, 1})) == 1);
  CHECK(pattern_count(P("231"), PatternSpec::classical({2, 3, 1})) == 1);
  CHECK(pattern_count(P("3241"), PatternSpec::vincular("32-1")) == 1);
  CHECK(pattern_count(P("4231"), PatternSpec::vincular("32-1")) == 1);
  std::vector<std::int64_t> values;
  for_each_permutation(3, [&](const Permutation& p) { values.push_back(evaluate(find_stat("st436"), p)); });
  CHECK(values == std::vector<std::int64_t>{0, 0, 0, 1, 0, 1});
}

TEST_CASE("cycle descents and arrows") {
  // The 5-cycle (1 4 2 5 3) in one-line notation.
  CHECK(cycle_descents(from_cycles(5, {{1, 4, 2, 5, 3}})) == 2);
  CHECK(arrow12_count(P("72358164")) == 3);
  CHECK(arrow12_count(Permutation::identity(6)) == 0);
  for (int n = 1; n <= 8; ++n) {
    std::int64_t signed_sum = 0;
    for_each_permutation(n, [&](const Permutation& p) { signed_sum += cycle_descents(p) % 2 ? -1 : 1; });
    CHECK(signed_sum == (std::int64_t{1} << (n - 1)));
  }
  for (int n = 1; n <= 7; ++n) CHECK(equidistribution(find_stat("st1744"), find_stat("st317"), n));
}

TEST_CASE("midpoints and extrema") {
  CHECK(stat("st371", "251346") == 0);
  CHECK(stat("st371", "251436") == 1);
  CHECK(stat("st371", "352461") == 2);
  CHECK(stat("st371", "352164") == 1);
  CHECK(stat("l2rmax_plus_r2lmin", "2134756") == 9);
  CHECK(stat("st1004", "53142") == 3);
  CHECK(stat("st314", "12345") == 5);
  CHECK(stat("st216", "12345") == 0);
  CHECK(stat("st031", "12345") == 5);
  for (const char* k : {"st371", "st1683", "st1687", "st373"}) CHECK(stat(k, "123456") == 0);
}

TEST_CASE("inversion variants") {
  CHECK(stat("st1727", "21534687") == 1);
  CHECK(visible_inversions(P("2431")) == 3);
  CHECK(stat("st1726", "12345") == 0);
  CHECK(stat("st1727", "12345") == 0);
  for_each_permutation(6, [](const Permutation& p) {
    CHECK(visible_inversions(p) + invisible_inversions(p) == inv(p));
    CHECK(even_inversions(p) + odd_inversions(p) == inv(p));
    CHECK(inversions_within_distance(p, 5) == inv(p));
  });
}

TEST_CASE("descent variants") {
  CHECK(up_down_runs(P("53142")) == 4);
  CHECK(stat("st483", "53142") == 2);
  CHECK(stat("st638", "53142") == 4);
  CHECK(generating_function(find_stat("st483"), 3) == IntPolynomial::from_coeffs({2, 4}));
  CHECK_THROWS_AS(width_descents(P("123"), 3), Error);
  CHECK(width_descents(P("321"), 1) == 2);
  CHECK(bialternating(P("12")) == 0);
  CHECK(q_minus_one(find_stat("st677"), 4) == 0);
}

TEST_CASE("sorting distances") {
  CHECK(stat("st1579", "2431") == 4);
  CHECK(stat("st1076", "2431") == 2);
  CHECK(stat("st1077", "2431") == 2);
  for (const char* k : {"st809", "st1579", "st1076", "st1077"}) CHECK(stat(k, "1234") == 0);
  for (int n = 1; n <= 5; ++n) {
    const auto depth = depth_table(n);
    for_each_permutation(n, [&](const Permutation& p) {
      const std::vector<int> w(p.entries().begin(), p.entries().end());
      CHECK(reduced_reflection_length(p) == 2 * depth.at(w) - inv(p));
    });
  }
}

TEST_CASE("entries, rank and long-cycle statistics") {
  CHECK(rank(Permutation::identity(4)) == 1);
  CHECK(rank(P("2431")) == 12);
  CHECK(entry_inversions(P("53142"), 2) == 2);
  CHECK(maj(P("21")) == 1);
  CHECK(imaj(P("21")) == 1);
  CHECK(stat("st825", "21") == 2);
  for (const char* k : {"st825", "st1379", "st1377", "st462", "st463", "st866", "st961"}) CHECK(stat(k, "1234") == 0);
  for (int n = 1; n <= 6; ++n) {
    const IntPolynomial f = generating_function(find_stat("st462"), n);
    for (const char* k : {"st463", "st866", "st961"}) CHECK(generating_function(find_stat(k), n) == f);
  }
}

TEST_CASE("registry") {
  const auto& all = stat_registry();
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].key < all[i].key);
  CHECK_THROWS_AS(find_stat("st99999"), Error);
  for (const auto& s : all) {
    for (int n = std::max(1, s.min_n); n <= 5; ++n) {
      CHECK(generating_function(s, n).eval(1) == static_cast<std::int64_t>(factorial(n)));
    }
  }
}
