#include <doctest.h>

#include <set>

#include "permsieve/permutation.hpp"

using namespace permsieve;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("parsing") {
  const Permutation p = P("2431");
  CHECK(std::vector<int>(p.entries().begin(), p.entries().end()) == std::vector<int>{2, 4, 3, 1});
  CHECK(P("1,2,3,4,5,6,7,8,9,10").is_identity());
  CHECK(P(" 3,1,2 ") == P("312"));
  CHECK(error_of([] { P("2231"); }) == Errc::NotAPermutation);
  CHECK(error_of([] { P("1,2,2"); }) == Errc::NotAPermutation);
  CHECK(error_of([] { P(""); }) == Errc::EmptyInput);
  CHECK(P("1,10,2,3,4,5,6,7,8,9").to_string() == "1,10,2,3,4,5,6,7,8,9");
  CHECK(P("2431").to_string() == "2431");
}

TEST_CASE("inverse and compose") {
  CHECK(inverse(P("2431")) == P("4132"));
  CHECK(compose(P("213"), P("132")) == P("231"));
  for_each_permutation(5, [](const Permutation& p) {
    CHECK(inverse(inverse(p)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(p, Permutation::identity(5)) == p);
  });
  CHECK(error_of([] { compose(P("12"), P("123")); }) == Errc::SizeMismatch);
}

TEST_CASE("cycles") {
  CHECK(cycle_form(Permutation::identity(3)).to_string() == "(1)(2)(3)");
  CHECK(cycle_form(P("2431")).to_string() == "(1 2 4)(3)");
  CHECK(cycle_form(P("324165")).to_string() == "(1 3 4)(2)(5 6)");
  CHECK(from_cycles(6, {{2}, {4, 1, 3}, {6, 5}}) == P("324165"));
  CHECK(from_cycles(8, {{7, 2, 3, 5}, {8, 1, 6, 4}}) == P("63587421"));
  CHECK(cycle_count(P("324165")) == 3);
}

TEST_CASE("lehmer codes") {
  CHECK(lehmer_code(P("231")).code == std::vector<int>{1, 1, 0});
  CHECK(lehmer_decode({{1, 2, 1, 0}}) == P("2431"));
  CHECK(error_of([] { lehmer_decode({{3, 0, 0}}); }) == Errc::CodeOutOfRange);
  for_each_permutation(6, [](const Permutation& p) { CHECK(lehmer_decode(lehmer_code(p)) == p); });
}

TEST_CASE("fundamental transform round trip") {
  for_each_permutation(6, [](const Permutation& p) { CHECK(fundamental_inverse(fundamental_transform(p)) == p); });
}

TEST_CASE("lex rank and enumeration") {
  std::set<std::uint64_t> seen;
  std::uint64_t expected = 0;
  for_each_permutation(5, [&](const Permutation& p) {
    CHECK(lex_rank(p) == expected);
    CHECK(lex_unrank(5, expected) == p);
    seen.insert(lex_rank(p));
    ++expected;
  });
  CHECK(seen.size() == 120);
  CHECK(lex_rank(P("2431")) == 11);
  CHECK(error_of([] { lex_unrank(3, 6); }) == Errc::IndexOutOfRange);
  CHECK(error_of([] { factorial(21); }) == Errc::Overflow);
  CHECK(factorial(20) == 2432902008176640000ULL);
}
