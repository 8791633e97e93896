#include "permsieve/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace permsieve {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::CodeOutOfRange: return "CodeOutOfRange";
    case Errc::WidthOutOfRange: return "WidthOutOfRange";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::NoPreimage: return "NoPreimage";
    case Errc::NotABijection: return "NotABijection";
    case Errc::NotAnInvolution: return "NotAnInvolution";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n == 0) throw Error(Errc::EmptyInput, "permutation of size 0");
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n) {
      throw Error(Errc::NotAPermutation, "value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw Error(Errc::NotAPermutation, "value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation make_unchecked(std::vector<int> entries) {
  return Permutation(Permutation::Unchecked{}, std::move(entries));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(Errc::EmptyInput, "permutation of size 0");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return make_unchecked(std::move(e));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : entries_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (int i = 0; i < size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::EmptyInput, "empty permutation text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9) {
      throw Error(Errc::NotAPermutation, "digit words are only accepted for n <= 9; use commas");
    }
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(Errc::NotAPermutation, std::string("unexpected character '") + c + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find(',', start);
      if (stop == std::string_view::npos) stop = text.size();
      std::string_view field = text.substr(start, stop - start);
      while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
      while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(Errc::NotAPermutation, "cannot read '" + std::string(field) + "' as an integer");
      }
      values.push_back(v);
      start = stop + 1;
    }
  }
  return Permutation(std::move(values));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> r(p.size());
  for (int i = 1; i <= p.size(); ++i) r[p(i) - 1] = i;
  return make_unchecked(std::move(r));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(Errc::SizeMismatch, "compose of sizes " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  }
  std::vector<int> r(p.size());
  for (int i = 1; i <= p.size(); ++i) r[i - 1] = p(q(i));
  return make_unchecked(std::move(r));
}

std::string CycleForm::to_string() const {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

CycleForm cycle_form(const Permutation& p, CycleOrder order) {
  const int n = p.size();
  CycleForm form;
  form.order = order;
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    form.cycles.push_back(std::move(cycle));
  }
  if (order == CycleOrder::LargestFirst) {
    for (auto& c : form.cycles) std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
    std::sort(form.cycles.begin(), form.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }
  // Tracing from the smallest unvisited point already yields SmallestFirst.
  return form;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> e(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int from = c[k];
      int to = c[(k + 1) % c.size()];
      if (from < 1 || from > n || e[from - 1] != 0) {
        throw Error(Errc::NotAPermutation, "cycles do not partition [n]");
      }
      e[from - 1] = to;
    }
  }
  return Permutation(std::move(e));
}

int cycle_count(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(n + 1, false);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++count;
    for (int x = start; !seen[x]; x = p(x)) seen[x] = true;
  }
  return count;
}

LehmerCode lehmer_code(const Permutation& p) {
  const int n = p.size();
  LehmerCode c;
  c.code.resize(n);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = i + 1; j <= n; ++j) count += p(j) < p(i);
    c.code[i - 1] = count;
  }
  return c;
}

Permutation lehmer_decode(const LehmerCode& c) {
  const int n = static_cast<int>(c.code.size());
  if (n == 0) throw Error(Errc::EmptyInput, "empty Lehmer code");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> e;
  e.reserve(n);
  for (int i = 0; i < n; ++i) {
    int L = c.code[i];
    if (L < 0 || L > n - 1 - i) {
      throw Error(Errc::CodeOutOfRange, "entry " + std::to_string(i + 1) + " = " + std::to_string(L));
    }
    e.push_back(pool[L]);
    pool.erase(pool.begin() + L);
  }
  return make_unchecked(std::move(e));
}

Permutation fundamental_transform(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  int running_max = 0;
  for (int v : p.entries()) {
    if (v > running_max) {
      cycles.emplace_back();
      running_max = v;
    }
    cycles.back().push_back(v);
  }
  return from_cycles(p.size(), cycles);
}

Permutation fundamental_inverse(const Permutation& p) {
  CycleForm form = cycle_form(p, CycleOrder::LargestFirst);
  std::vector<int> e;
  e.reserve(p.size());
  for (const auto& c : form.cycles) e.insert(e.end(), c.begin(), c.end());
  return make_unchecked(std::move(e));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error(Errc::Overflow, "factorial(" + std::to_string(n) + ")");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) smaller_later += entries[j] < entries[i];
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_later);
  }
  return rank;
}

std::uint64_t lex_rank(const Permutation& p) { return lex_rank(p.entries()); }

Permutation lex_unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw Error(Errc::IndexOutOfRange, "rank " + std::to_string(rank));
  LehmerCode c;
  c.code.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    c.code[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  return lehmer_decode(c);
}

void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& fn) {
  if (first >= last) return;
  const Permutation start = lex_unrank(n, first);
  std::vector<int> e(start.entries().begin(), start.entries().end());
  for (std::uint64_t r = first; r < last; ++r) {
    fn(make_unchecked(e));
    std::next_permutation(e.begin(), e.end());
  }
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  for_each_permutation_in_range(n, 0, factorial(n), fn);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace permsieve
