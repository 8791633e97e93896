#include "permsieve/bijections.hpp"

#include <algorithm>

#include "permsieve/motzkin.hpp"
#include "permsieve/statistics.hpp"

namespace permsieve {

namespace {

std::vector<int> word_of(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

}  // namespace

Permutation reverse(const Permutation& p) {
  auto w = word_of(p);
  std::reverse(w.begin(), w.end());
  return make_unchecked(std::move(w));
}

Permutation complement(const Permutation& p) {
  auto w = word_of(p);
  for (int& v : w) v = p.size() + 1 - v;
  return make_unchecked(std::move(w));
}

Permutation rotation(const Permutation& p) {
  auto w = word_of(p);
  std::rotate(w.begin(), w.begin() + 1, w.end());
  return make_unchecked(std::move(w));
}

Permutation conj_long_cycle(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(n);
  // (c p c^-1)(i) = c(p(i - 1)), indices mod n.
  for (int i = 1; i <= n; ++i) {
    const int pre = i == 1 ? n : i - 1;
    w[i - 1] = p(pre) % n + 1;
  }
  return make_unchecked(std::move(w));
}

Permutation lehmer_code_rotation(const Permutation& p) {
  LehmerCode c = lehmer_code(p);
  const int n = p.size();
  for (int i = 0; i < n; ++i) c.code[i] = (c.code[i] + 1) % (n - i);
  return lehmer_decode(c);
}

Permutation toric_promotion(const Permutation& p, ToricOrder order) {
  const int n = p.size();
  if (n < 2) return p;
  auto w = word_of(p);
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[w[i]] = i;
  std::vector<std::pair<int, int>> stages;
  for (int i = 1; i < n; ++i) stages.emplace_back(i, i + 1);
  stages.emplace_back(n, 1);
  if (order == ToricOrder::Backward) std::reverse(stages.begin(), stages.end());
  for (auto [a, b] : stages) {
    if (std::abs(pos[a] - pos[b]) > 1) {
      std::swap(w[pos[a]], w[pos[b]]);
      std::swap(pos[a], pos[b]);
    }
  }
  return make_unchecked(std::move(w));
}

Permutation corteel(const Permutation& p) { return fz_decode(motzkin_complement(fz_encode(p))); }

Permutation alexandersson_kebede(const Permutation& p) {
  const auto minima_values = [](const std::vector<int>& w) {
    std::vector<int> vals;
    int best = static_cast<int>(w.size()) + 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (*it < best) {
        best = *it;
        vals.push_back(*it);
      }
    }
    std::sort(vals.begin(), vals.end());
    return vals;
  };
  auto w = word_of(p);
  const auto original = minima_values(w);
  for (int i = 0; i + 1 < p.size(); i += 2) {
    std::swap(w[i], w[i + 1]);
    if (minima_values(w) == original) return make_unchecked(std::move(w));
    std::swap(w[i], w[i + 1]);
  }
  return p;
}

Permutation psi_3star(const Permutation& p) {
  const int n = p.size();
  auto w = word_of(p);
  for (int j = n - 1; j >= 1; --j) {
    const int m = *std::max_element(w.begin(), w.begin() + j);
    if (m < w[j]) continue;
    for (int k = j + 1; k < n; ++k) {
      if (w[k] < m) {
        std::swap(w[j], w[k]);
        return make_unchecked(std::move(w));
      }
    }
  }
  return p;
}

namespace {

std::vector<int> psi_32_1_word(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n <= 2) return w;
  if (n == 3) {
    if (w == std::vector<int>{3, 1, 2}) return {3, 2, 1};
    if (w == std::vector<int>{3, 2, 1}) return {3, 1, 2};
    return w;
  }
  if (w[0] != 1 && w[0] != 2) {
    std::vector<int> r = w;
    for (int& v : r) v = v == 1 ? 2 : v == 2 ? 1 : v;
    return r;
  }
  std::vector<int> reduced;
  for (int i = 1; i < n; ++i) reduced.push_back(w[i] == 1 ? 1 : w[i] - 1);
  const std::vector<int> image = psi_32_1_word(reduced);
  std::vector<int> r{w[0]};
  for (int v : image) r.push_back(w[0] == 2 && v == 1 ? 1 : v + 1);
  return r;
}

}  // namespace

Permutation psi_32_1(const Permutation& p) { return make_unchecked(psi_32_1_word(word_of(p))); }

Permutation psi_block(const Permutation& p) {
  const int n = p.size();
  const Permutation pos = inverse(p);
  // Pairs (i, i+1) start at odd i for even n and at even i for odd n; the
  // block of that pair is the same two positions.
  const int parity = n % 2 == 0 ? 1 : 0;
  for (int i = n - 1; i >= 1; --i) {
    if (i % 2 != parity) continue;
    const int a = pos(i), b = pos(i + 1);
    const bool home = std::min(a, b) == i && std::max(a, b) == i + 1;
    if (!home) {
      auto w = word_of(p);
      std::swap(w[a - 1], w[b - 1]);
      return make_unchecked(std::move(w));
    }
  }
  return p;
}

Permutation position_swap(const Permutation& p, PositionSwap which) {
  const int n = p.size();
  int a = 0, b = 0;
  switch (which) {
    case PositionSwap::LastTwo: a = n - 1; b = n; break;
    case PositionSwap::FirstThird:
    case PositionSwap::ReversePrefix3: a = 1; b = 3; break;
    case PositionSwap::FirstLast: a = 1; b = n; break;
    case PositionSwap::FirstTwo: a = 1; b = 2; break;
    case PositionSwap::SecondThird: a = 2; b = 3; break;
  }
  if (a < 1 || b > n || a == b) return p;
  auto w = word_of(p);
  std::swap(w[a - 1], w[b - 1]);
  return make_unchecked(std::move(w));
}

}  // namespace permsieve
