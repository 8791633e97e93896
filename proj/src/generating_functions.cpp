#include "permsieve/generating_functions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "permsieve/error.hpp"
#include "permsieve/permutation.hpp"

namespace permsieve {

namespace {

void require_n(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
}

}  // namespace

IntPolynomial mahonian_gf(int n) {
  require_n(n);
  IntPolynomial f = IntPolynomial::constant(1);
  for (int i = 1; i <= n; ++i) f = f * IntPolynomial::q_integer(i);
  return f;
}

IntPolynomial cycles_gf(int n) {
  require_n(n);
  IntPolynomial f = IntPolynomial::monomial(1);
  for (int k = 1; k < n; ++k) f = f * IntPolynomial::from_coeffs({k, 1});
  return f;
}

IntPolynomial rank_gf(int n) {
  require_n(n);
  return IntPolynomial::q_integer(static_cast<int>(factorial(n))).shifted(1);
}

IntPolynomial entry_gf(int n) {
  require_n(n);
  return IntPolynomial::q_integer(n).shifted(1) * IntPolynomial::constant(static_cast<std::int64_t>(factorial(n - 1)));
}

IntPolynomial inv_entry_gf(int n, int i) {
  require_n(n);
  if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "entry " + std::to_string(i));
  const auto scale = static_cast<std::int64_t>(factorial(n) / static_cast<std::uint64_t>(n - i + 1));
  return IntPolynomial::q_integer(n - i + 1) * IntPolynomial::constant(scale);
}

IntPolynomial e_hat(int k, int n) {
  require_n(n);
  if (k < 1 || k > n) throw Error(Errc::InvalidArgument, "k out of range");
  IntPolynomial sum;
  for (int i = 0; i < k; ++i) {
    IntPolynomial bracket = IntPolynomial::monomial(k - i, binomial(n, i)) + IntPolynomial::constant(binomial(n, i - 1));
    IntPolynomial term = IntPolynomial::q_integer(k - i).pow(n) * bracket;
    term = term.shifted(k * (i - 1));
    if (i % 2 == 1) term = IntPolynomial() - term;
    sum += term;
  }
  return sum.shifted(k - k * k);
}

IntPolynomial crossings_gf_closed(int n) {
  IntPolynomial f;
  for (int k = 1; k <= n; ++k) f += e_hat(k, n);
  return f;
}

IntPolynomial stat1911_product_gf(int n) {
  require_n(n);
  IntPolynomial f = IntPolynomial::constant(n);
  for (int i = 1; i < n; ++i) {
    IntPolynomial factor;
    for (int t = 0; t <= n - 2; ++t) factor.add_term(i * t, 1);
    f = f * factor;
  }
  return f;
}

namespace {

void strict_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    strict_rec(remaining - part, part - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> strict_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  strict_rec(n, n, cur, out);
  return out;
}

std::int64_t shifted_tableaux_count(const std::vector<int>& lambda) {
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    if (lambda[r] < 1 || (r + 1 < lambda.size() && lambda[r] <= lambda[r + 1])) {
      throw Error(Errc::InvalidArgument, "shape is not a strict partition");
    }
  }
  if (lambda.empty()) return 1;

  static std::mutex mu;
  static std::map<std::vector<int>, std::int64_t> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
  }
  // The largest entry sits in a removable corner: the last box of a row
  // whose shortening keeps the rows strictly decreasing.
  std::int64_t total = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const bool last = r + 1 == lambda.size();
    if (last || lambda[r] - 1 > lambda[r + 1]) {
      std::vector<int> smaller = lambda;
      if (--smaller[r] == 0) smaller.pop_back();
      total = checked_add(total, shifted_tableaux_count(smaller));
    }
  }
  std::lock_guard lock(mu);
  memo.emplace(lambda, total);
  return total;
}

IntPolynomial shifted_circled_gf(int n) {
  require_n(n);
  IntPolynomial f;
  const IntPolynomial one_plus_q = IntPolynomial::from_coeffs({1, 1});
  for (const auto& lambda : strict_partitions(n)) {
    const std::int64_t g = shifted_tableaux_count(lambda);
    f += one_plus_q.pow(n - static_cast<int>(lambda.size())) * IntPolynomial::constant(checked_mul(g, g));
  }
  return f;
}

}  // namespace permsieve
