#include "permsieve/motzkin.hpp"

#include <algorithm>

namespace permsieve {

std::vector<int> path_heights(const std::string& word) {
  std::vector<int> h;
  h.reserve(word.size());
  int height = 0;
  for (char s : word) {
    switch (s) {
      case 'u':
        h.push_back(height++);
        break;
      case 'd':
        if (height == 0) throw Error(Errc::NoPreimage, "path goes below zero");
        h.push_back(--height);
        break;
      case 'r':
      case 'b':
        h.push_back(height);
        break;
      default:
        throw Error(Errc::NoPreimage, std::string("unknown step '") + s + "'");
    }
  }
  if (height != 0) throw Error(Errc::NoPreimage, "path does not return to zero");
  return h;
}

void validate_path(const ColoredMotzkinPath& m) {
  if (m.weights.size() != m.word.size() || m.heights.size() != m.word.size()) {
    throw Error(Errc::SizeMismatch, "word, weights and heights differ in length");
  }
  if (path_heights(m.word) != m.heights) throw Error(Errc::WeightOutOfRange, "heights do not match word");
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    const int bound = m.word[i] == 'r' ? m.heights[i] - 1 : m.heights[i];
    if (m.weights[i] < 0 || m.weights[i] > bound) {
      throw Error(Errc::WeightOutOfRange, "weight " + std::to_string(m.weights[i]) + " at step " + std::to_string(i + 1));
    }
  }
}

ColoredMotzkinPath fz_encode(const Permutation& p) {
  const int n = p.size();
  const Permutation q = inverse(p);
  ColoredMotzkinPath m;
  m.word.resize(n);
  m.weights.resize(n);
  for (int i = 1; i <= n; ++i) {
    const int out = p(i), in = q(i);
    char s;
    if (out > i && in > i) s = 'u';
    else if (out < i && in < i) s = 'd';
    else if (out < i && i < in) s = 'r';
    else s = 'b';
    m.word[i - 1] = s;
    int w = 0;
    if (s == 'u' || s == 'b') {
      for (int j = 1; j < i; ++j) w += p(j) > out;
    } else {
      for (int j = i + 1; j <= n; ++j) w += p(j) < out;
    }
    m.weights[i - 1] = w;
  }
  m.heights = path_heights(m.word);
  return m;
}

ColoredMotzkinPath motzkin_complement(const ColoredMotzkinPath& m) {
  validate_path(m);
  ColoredMotzkinPath c = m;
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    c.weights[i] = m.heights[i] - m.weights[i] - (m.word[i] == 'r' ? 1 : 0);
  }
  return c;
}

Permutation fz_decode(const ColoredMotzkinPath& m) {
  validate_path(m);
  const int n = static_cast<int>(m.word.size());
  if (n == 0) throw Error(Errc::EmptyInput, "empty path");
  std::vector<int> sigma(n + 1, 0);
  // Open arcs above the diagonal, front closes first; open targets below it.
  std::vector<int> upper;
  std::vector<int> lower;
  for (int i = 1; i <= n; ++i) {
    const char s = m.word[i - 1];
    const int w = m.weights[i - 1];
    const int h = m.heights[i - 1];
    if (s == 'b' && w == h) {
      sigma[i] = i;
      continue;
    }
    if (s == 'd' || s == 'b') {
      if (upper.empty()) throw Error(Errc::NoPreimage, "no open arc to close");
      sigma[upper.front()] = i;
      upper.erase(upper.begin());
    }
    if (s == 'u' || s == 'b') {
      const int pos = static_cast<int>(upper.size()) - w;
      if (pos < 0) throw Error(Errc::NoPreimage, "weight exceeds open arcs");
      upper.insert(upper.begin() + pos, i);
    }
    if (s == 'd' || s == 'r') {
      if (w >= static_cast<int>(lower.size())) throw Error(Errc::NoPreimage, "weight exceeds open targets");
      sigma[i] = lower[w];
      lower.erase(lower.begin() + w);
    }
    if (s == 'u' || s == 'r') lower.insert(std::lower_bound(lower.begin(), lower.end(), i), i);
  }
  if (!upper.empty() || !lower.empty() || std::count(sigma.begin() + 1, sigma.end(), 0) != 0) {
    throw Error(Errc::NoPreimage, "arcs left open");
  }
  std::vector<int> entries(sigma.begin() + 1, sigma.end());
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) throw Error(Errc::NoPreimage, "decoded word is not a permutation");
  }
  Permutation result = make_unchecked(std::move(entries));
  if (fz_encode(result) != m) throw Error(Errc::NoPreimage, "path is not an encoding");
  return result;
}

}  // namespace permsieve
