#include "permsieve/csp.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace permsieve {

IntPolynomial generating_function(const StatDescriptor& stat, int n, int workers) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (stat.closed_gf) return stat.closed_gf(n);
  if (!stat.defined_at(n)) {
    throw Error(Errc::WidthOutOfRange, stat.key + " is undefined for n = " + std::to_string(n));
  }
  const std::uint64_t total = factorial(n);
  const std::uint64_t chunks = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1, total);

  auto run_chunk = [&](std::uint64_t first, std::uint64_t last) {
    IntPolynomial part;
    for_each_permutation_in_range(n, first, last, [&](const Permutation& p) {
      part.add_term(static_cast<int>(stat.eval(p)), 1);
    });
    return part;
  };

  if (chunks == 1) return run_chunk(0, total);

  std::vector<IntPolynomial> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        parts[c] = run_chunk(total * c / chunks, total * (c + 1) / chunks);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  IntPolynomial f;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (errors[c]) std::rethrow_exception(errors[c]);
    f += parts[c];
  }
  return f;
}

IntPolynomial fold_mod_cyclic(const IntPolynomial& f, int c) { return f.fold(c); }

IntPolynomial orbit_polynomial(const OrbitDecomposition& d) {
  std::vector<std::int64_t> coeffs(d.order, 0);
  for (auto [size, count] : d.size_counts) {
    const std::uint64_t step = d.order / size;
    for (std::uint64_t i = 0; i < size; ++i) coeffs[i * step] += static_cast<std::int64_t>(count);
  }
  return IntPolynomial::from_coeffs(std::move(coeffs));
}

CspVerdict csp_check(const IntPolynomial& gf, const OrbitDecomposition& orbits) {
  if (orbits.order > 1'000'000) throw Error(Errc::InvalidArgument, "map order too large to fold");
  const int c = static_cast<int>(orbits.order);
  CspVerdict v;
  v.n = orbits.n;
  v.order = orbits.order;
  v.gf = gf;
  v.signature = orbit_signature(orbits);
  v.residue_f = fold_mod_cyclic(gf, c);
  v.residue_t = orbit_polynomial(orbits);
  v.holds = v.residue_f == v.residue_t;

  if (gf.min_exponent() < 0) {
    v.shift_used = gf.min_exponent();
    const bool shifted_holds = fold_mod_cyclic(gf.shifted(-v.shift_used), c) == v.residue_t;
    v.shift_consistent = shifted_holds == v.holds;
  }

  long double scale = 1;
  for (std::int64_t x : gf.raw_coeffs()) scale += std::abs(static_cast<long double>(x));
  const auto fixed = fixed_counts(orbits);
  for (std::uint64_t d = 0; d < orbits.order; ++d) {
    CspRow row;
    row.d = d;
    row.fixed = fixed[d];
    const auto z = v.residue_f.eval_root(static_cast<int>(d), c);
    row.value_re = z.real();
    row.value_im = z.imag();
    const long double err = std::abs(z - std::complex<long double>(static_cast<long double>(fixed[d]), 0));
    row.agrees = err <= 1e-9L * scale;
    if (!row.agrees) v.witnesses.push_back(d);
    v.table.push_back(row);
  }
  return v;
}

CspVerdict csp_check(const StatDescriptor& stat, const MapDescriptor& map, int n) {
  return csp_check(generating_function(stat, n), decompose(map, n));
}

std::int64_t q_minus_one(const StatDescriptor& stat, int n) { return generating_function(stat, n).eval(-1); }

bool equidistribution(const StatDescriptor& a, const StatDescriptor& b, int n) {
  return generating_function(a, n) == generating_function(b, n);
}

bool transport_check(const StatDescriptor& a, const StatDescriptor& b,
                     const std::function<Permutation(const Permutation&)>& phi, int n) {
  bool ok = true;
  for_each_permutation(n, [&](const Permutation& p) {
    if (ok && evaluate(b, phi(p)) != evaluate(a, p)) ok = false;
  });
  return ok;
}

bool parity_pairing_check(const StatDescriptor& stat, const MapDescriptor& involution,
                          std::int64_t expected_fixed_value, int n) {
  const auto parity = [](std::int64_t x) { return ((x % 2) + 2) % 2; };
  bool ok = true;
  for_each_permutation(n, [&](const Permutation& p) {
    const Permutation image = involution.apply(p);
    if (involution.apply(image) != p) {
      throw Error(Errc::NotAnInvolution, involution.key + " squared moves " + p.to_string());
    }
    const std::int64_t here = evaluate(stat, p);
    if (image == p) {
      if (parity(here) != parity(expected_fixed_value)) ok = false;
    } else if (parity(here) == parity(evaluate(stat, image))) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace permsieve
