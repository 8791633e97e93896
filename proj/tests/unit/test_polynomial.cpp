#include <doctest.h>

#include "permsieve/error.hpp"
#include "permsieve/polynomial.hpp"

using namespace permsieve;

TEST_CASE("normalization and arithmetic") {
  const IntPolynomial f = IntPolynomial::from_coeffs({0, 1, 0, 1, 0});
  CHECK(f.min_exponent() == 1);
  CHECK(f.max_exponent() == 3);
  CHECK(f.to_string() == "q + q^3");
  CHECK((f - f).is_zero());
  CHECK(IntPolynomial::q_integer(3) * IntPolynomial::q_integer(2) == IntPolynomial::from_coeffs({1, 2, 2, 1}));
  CHECK(IntPolynomial::q_integer(2).pow(3) == IntPolynomial::from_coeffs({1, 3, 3, 1}));
  CHECK(f.shifted(-2) == IntPolynomial::from_coeffs({1, 0, 1}, -1));
  CHECK(IntPolynomial::from_coeffs({1, 2, 3}).reversed() == IntPolynomial::from_coeffs({3, 2, 1}, -2));
}

TEST_CASE("evaluation") {
  const IntPolynomial f = IntPolynomial::from_coeffs({1, 4, 1});
  CHECK(f.eval(1) == 6);
  CHECK(f.eval(-1) == -2);
  CHECK(f.eval(2) == 13);
  const IntPolynomial laurent = IntPolynomial::from_coeffs({1, 1}, -1);
  CHECK(laurent.eval(-1) == 0);
  CHECK(laurent.eval(1) == 2);
  const auto z = IntPolynomial::q_integer(4).eval_root(1, 4);
  CHECK(std::abs(static_cast<double>(z.real())) < 1e-12);
  CHECK(std::abs(static_cast<double>(z.imag())) < 1e-12);
}

TEST_CASE("folding") {
  CHECK(IntPolynomial::from_coeffs({0, 1, 0, 1}).fold(2) == IntPolynomial::from_coeffs({0, 2}));
  CHECK(IntPolynomial::from_coeffs({3, 1, 7}).fold(1) == IntPolynomial::constant(11));
  CHECK(IntPolynomial::from_coeffs({1, 1}, -1).fold(2) == IntPolynomial::from_coeffs({1, 1}));
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), Error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Error);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
}
