#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace permsieve {

/// Exact Laurent polynomial in q with int64 coefficients. Storage is
/// sum_k coeffs[k] * q^(offset + k); both ends are kept nonzero. Every
/// arithmetic step is overflow-checked and throws Errc::Overflow.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial from_coeffs(std::vector<std::int64_t> coeffs, int offset = 0);
  static IntPolynomial monomial(int exponent, std::int64_t coeff = 1);
  static IntPolynomial constant(std::int64_t c) { return monomial(0, c); }

  /// [k]_q = 1 + q + ... + q^(k-1).
  static IntPolynomial q_integer(int k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept { return offset_; }
  int max_exponent() const noexcept { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const noexcept;
  const std::vector<std::int64_t>& raw_coeffs() const noexcept { return coeffs_; }

  /// Dense coefficients of q^0..q^max; requires min_exponent() >= 0.
  std::vector<std::int64_t> dense() const;

  void add_term(int exponent, std::int64_t coeff);

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial pow(int k) const;

  /// Multiply by q^k.
  IntPolynomial shifted(int k) const;

  /// Exact value at an integer point; negative exponents need q in {1, -1}.
  std::int64_t eval(std::int64_t q) const;

  std::complex<long double> eval_root(int d, int c) const;

  /// Reduce every exponent mod c into [0, c).
  IntPolynomial fold(int c) const;

  /// q^e -> q^(-e).
  IntPolynomial reversed() const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<std::int64_t> coeffs_;
  int offset_ = 0;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t binomial(int n, int k);

}  // namespace permsieve
