#include <doctest.h>

#include <map>

#include "permsieve/arc_diagram.hpp"
#include "permsieve/bijections.hpp"
#include "permsieve/map_registry.hpp"
#include "permsieve/motzkin.hpp"
#include "permsieve/statistics.hpp"

using namespace permsieve;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

bool arcs_equal(const ArcDiagram& a, const ArcDiagram& b) {
  if (a.n != b.n || a.arcs.size() != b.arcs.size()) return false;
  for (std::size_t i = 0; i < a.arcs.size(); ++i) {
    if (a.arcs[i].upper != b.arcs[i].upper || a.arcs[i].lower != b.arcs[i].lower || a.arcs[i].sides != b.arcs[i].sides)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("elementary maps") {
  CHECK(reverse(P("12345")) == P("54321"));
  CHECK(complement(P("12345")) == P("54321"));
  CHECK(rotation(P("2431")) == P("4312"));
  CHECK(lehmer_code_rotation(P("123")) == P("231"));
  CHECK(position_swap(P("21534687"), PositionSwap::LastTwo) == P("21534678"));
}

TEST_CASE("foata-zeilberger path of the worked example") {
  const Permutation s = P("1,7,6,3,8,10,9,12,2,11,4,5");
  const ColoredMotzkinPath m = fz_encode(s);
  CHECK(m.word == "buurubbbdbdd");
  CHECK(m.weights == std::vector<int>{0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0});
  CHECK(m.heights == std::vector<int>{0, 0, 1, 2, 2, 3, 3, 3, 2, 2, 1, 0});
  const ColoredMotzkinPath c = motzkin_complement(m);
  CHECK(c.weights == std::vector<int>{0, 0, 0, 0, 2, 3, 2, 3, 2, 1, 1, 0});
  CHECK(fz_decode(c) == P("1,10,12,2,7,6,9,8,5,11,4,3"));
  const ColoredMotzkinPath id = fz_encode(Permutation::identity(5));
  CHECK(id.word == "bbbbb");
  CHECK(fz_decode(id).is_identity());
  CHECK_THROWS_AS(path_heights("d"), Error);
}

TEST_CASE("path round trips") {
  for_each_permutation(7, [](const Permutation& p) { CHECK(fz_decode(fz_encode(p)) == p); });
  for_each_permutation(6, [](const Permutation& p) {
    const auto m = fz_encode(p);
    CHECK(motzkin_complement(motzkin_complement(m)).weights == m.weights);
  });
}

TEST_CASE("corteel swaps crossings and nestings") {
  CHECK(corteel(P("1,7,6,3,8,10,9,12,2,11,4,5")) == P("1,10,12,2,7,6,9,8,5,11,4,3"));
  for_each_permutation(6, [](const Permutation& p) {
    CHECK(crossings(corteel(p)) == nestings(p));
    CHECK(corteel(corteel(p)) == p);
  });
}

TEST_CASE("laguerre reconstruction against a brute-force inverse") {
  CHECK(invert_laguerre_heap(P("1,10,12,2,7,6,9,8,5,11,4,3")) == P("1,11,4,3,9,8,5,7,6,12,2,10"));
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    for (const auto& p : all) {
      const ArcDiagram target = laguerre_reflect(laguerre_encode(p));
      std::vector<Permutation> preimages;
      for (const auto& q : all) {
        if (arcs_equal(laguerre_encode(q), target)) preimages.push_back(q);
      }
      REQUIRE(preimages.size() == 1);
      CHECK(invert_laguerre_heap(p) == preimages.front());
    }
  }
  for_each_permutation(7, [](const Permutation& p) { CHECK(invert_laguerre_heap(invert_laguerre_heap(p)) == p); });
}

TEST_CASE("kappa and the psi maps") {
  CHECK(alexandersson_kebede(P("2134756")) == P("2134576"));
  CHECK(psi_3star(P("251346")) == P("251436"));
  CHECK(psi_3star(P("352461")) == P("352164"));
  CHECK(psi_32_1(P("1432")) == P("1423"));
  CHECK(psi_32_1(P("1342")) == P("1342"));
  CHECK(psi_block(P("21534687")) == P("21634587"));
  CHECK(psi_block(P("215346879")) == P("215346978"));
  CHECK(psi_block(P("132456789")) == P("132456789"));
  for_each_permutation(7, [](const Permutation& p) {
    CHECK(alexandersson_kebede(alexandersson_kebede(p)) == p);
    bool fixed = true;
    for (int i = 1; i + 1 <= 7; i += 2) fixed = fixed && std::max(p(i), p(i + 1)) == i + 1 && std::min(p(i), p(i + 1)) == i;
    CHECK((alexandersson_kebede(p) == p) == fixed);
  });
}

TEST_CASE("position swaps are fixed-point-free involutions") {
  for (auto which : {PositionSwap::LastTwo, PositionSwap::FirstThird, PositionSwap::FirstLast, PositionSwap::FirstTwo,
                     PositionSwap::SecondThird}) {
    for_each_permutation(6, [&](const Permutation& p) {
      CHECK(position_swap(position_swap(p, which), which) == p);
      CHECK(position_swap(p, which) != p);
    });
  }
  for_each_permutation(6, [](const Permutation& p) {
    const int a = direction_changes(p);
    const int b = direction_changes(position_swap(p, PositionSwap::LastTwo));
    CHECK((a - b) % 2 != 0);
  });
}

TEST_CASE("map registry") {
  const auto& all = map_registry();
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].key < all[i].key);
  CHECK_THROWS_AS(find_map("no_such_map"), Error);
  for (const auto* m : registered_involutions()) {
    for_each_permutation(6, [&](const Permutation& p) { CHECK(m->apply(m->apply(p)) == p); });
  }
}
