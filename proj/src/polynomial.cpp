#include "permsieve/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "permsieve/error.hpp"

namespace permsieve {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "coefficient addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "coefficient multiplication");
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<std::int64_t> coeffs, int offset) {
  IntPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.offset_ = offset;
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::monomial(int exponent, std::int64_t coeff) {
  return from_coeffs({coeff}, exponent);
}

IntPolynomial IntPolynomial::q_integer(int k) {
  return from_coeffs(std::vector<std::int64_t>(std::max(k, 0), 1));
}

void IntPolynomial::normalize() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](std::int64_t c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) offset_ = 0;
}

std::int64_t IntPolynomial::coeff(int exponent) const noexcept {
  const long k = static_cast<long>(exponent) - offset_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[k];
}

std::vector<std::int64_t> IntPolynomial::dense() const {
  if (is_zero()) return {};
  if (offset_ < 0) throw Error(Errc::InvalidArgument, "dense() of a polynomial with negative exponents");
  std::vector<std::int64_t> out(offset_, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

void IntPolynomial::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  if (is_zero()) {
    coeffs_ = {c};
    offset_ = exponent;
    return;
  }
  if (exponent < offset_) {
    coeffs_.insert(coeffs_.begin(), offset_ - exponent, 0);
    offset_ = exponent;
  }
  const std::size_t k = exponent - offset_;
  if (k >= coeffs_.size()) coeffs_.resize(k + 1, 0);
  coeffs_[k] = checked_add(coeffs_[k], c);
  if (coeffs_[k] == 0) normalize();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    if (o.coeffs_[k] == 0) continue;
    const int e = o.offset_ + static_cast<int>(k);
    if (is_zero() || e < offset_ || e > max_exponent()) {
      add_term(e, o.coeffs_[k]);
    } else {
      coeffs_[e - offset_] = checked_add(coeffs_[e - offset_], o.coeffs_[k]);
    }
  }
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  IntPolynomial neg = o;
  for (auto& c : neg.coeffs_) c = checked_mul(c, -1);
  return *this += neg;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntPolynomial::from_coeffs(std::move(r), a.offset_ + b.offset_);
}

IntPolynomial IntPolynomial::pow(int k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative power");
  IntPolynomial r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  IntPolynomial r = *this;
  if (!r.is_zero()) r.offset_ += k;
  return r;
}

std::int64_t IntPolynomial::eval(std::int64_t q) const {
  if (is_zero()) return 0;
  if (offset_ < 0 && q != 1 && q != -1) {
    throw Error(Errc::InvalidArgument, "integer evaluation of negative powers away from +-1");
  }
  std::int64_t total = 0;
  if (q == 1 || q == -1) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const int e = offset_ + static_cast<int>(k);
      const bool odd = (e % 2) != 0;
      total = checked_add(total, (q == -1 && odd) ? checked_mul(coeffs_[k], -1) : coeffs_[k]);
    }
    return total;
  }
  std::int64_t power = 1;
  for (int e = 0; e < offset_; ++e) power = checked_mul(power, q);
  for (std::int64_t c : coeffs_) {
    total = checked_add(total, checked_mul(c, power));
    power = checked_mul(power, q);
  }
  return total;
}

std::complex<long double> IntPolynomial::eval_root(int d, int c) const {
  std::complex<long double> total = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    long e = static_cast<long>(offset_) + static_cast<long>(k);
    long r = ((e * d) % c + c) % c;
    long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / c;
    total += static_cast<long double>(coeffs_[k]) * std::polar(1.0L, angle);
  }
  return total;
}

IntPolynomial IntPolynomial::fold(int c) const {
  if (c < 1) throw Error(Errc::InvalidArgument, "fold modulus must be >= 1");
  std::vector<std::int64_t> r(c, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const long e = static_cast<long>(offset_) + static_cast<long>(k);
    const long m = ((e % c) + c) % c;
    r[m] = checked_add(r[m], coeffs_[k]);
  }
  return from_coeffs(std::move(r));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<std::int64_t> r(coeffs_.rbegin(), coeffs_.rend());
  return from_coeffs(std::move(r), is_zero() ? 0 : -max_exponent());
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const int e = offset_ + static_cast<int>(k);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace permsieve
