#include "permsieve/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace permsieve {

namespace {

template <typename Fn>
void run_parallel(std::size_t count, int workers, Fn&& fn) {
  const int w = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

template <typename T>
std::vector<const T*> select(const std::vector<T>& all, const std::vector<std::string>& keys,
                             const T& (*find)(std::string_view)) {
  std::vector<const T*> out;
  if (keys.empty()) {
    for (const auto& x : all) out.push_back(&x);
    return out;
  }
  for (const auto& k : keys) out.push_back(&find(k));
  std::sort(out.begin(), out.end(), [](const T* a, const T* b) { return a->key < b->key; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct GfSlot {
  std::optional<IntPolynomial> gf;
  std::string skip_reason;
};

struct OrbitSlot {
  std::optional<OrbitDecomposition> orbits;
  std::string error;
};

}  // namespace

ScanReport scan(int n_min, int n_max, const ScanFilters& filters, const ScanOptions& options) {
  if (n_min < 1 || n_max > 8 || n_min > n_max) {
    throw Error(Errc::InvalidArgument, "scan range must satisfy 1 <= n_min <= n_max <= 8");
  }
  const auto stats = select<StatDescriptor>(stat_registry(), filters.stats, &find_stat);
  const auto maps = select<MapDescriptor>(map_registry(), filters.maps, &find_map);
  const int span = n_max - n_min + 1;

  std::vector<GfSlot> gfs(stats.size() * span);
  run_parallel(gfs.size(), options.workers, [&](std::size_t i) {
    const StatDescriptor& s = *stats[i / span];
    const int n = n_min + static_cast<int>(i % span);
    GfSlot& slot = gfs[i];
    if (!s.closed_gf && !s.defined_at(n)) {
      slot.skip_reason = "undefined for n < " + std::to_string(s.min_n);
      return;
    }
    if (options.cache) {
      if (auto hit = options.cache->load_gf(s.key, n); hit && hit->eval(1) == static_cast<std::int64_t>(factorial(n))) {
        slot.gf = std::move(hit);
        return;
      }
    }
    try {
      slot.gf = generating_function(s, n);
      if (options.cache) options.cache->store_gf(s.key, n, *slot.gf);
    } catch (const Error& e) {
      slot.skip_reason = e.what();
    }
  });

  std::vector<OrbitSlot> orbs(maps.size() * span);
  run_parallel(orbs.size(), options.workers, [&](std::size_t i) {
    const MapDescriptor& m = *maps[i / span];
    const int n = n_min + static_cast<int>(i % span);
    OrbitSlot& slot = orbs[i];
    if (options.cache) {
      if (auto hit = options.cache->load_orbits(m.key, n)) {
        try {
          slot.orbits = decomposition_from_sizes(n, *hit);
          return;
        } catch (const Error&) {
          // Recompute below.
        }
      }
    }
    try {
      OrbitDecomposition d = decompose(m, n);
      d.orbits.clear();
      if (options.cache) options.cache->store_orbits(m.key, n, d.size_counts);
      slot.orbits = std::move(d);
    } catch (const Error& e) {
      slot.error = e.what();
    }
  });

  ScanReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  for (std::size_t si = 0; si < stats.size(); ++si) {
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
      PairResult pr;
      pr.stat = stats[si]->key;
      pr.map = maps[mi]->key;
      bool failed = false;
      for (int k = 0; k < span; ++k) {
        const int n = n_min + k;
        const GfSlot& g = gfs[si * span + k];
        const OrbitSlot& o = orbs[mi * span + k];
        if (!g.gf) {
          pr.skipped.emplace_back(n, g.skip_reason);
          continue;
        }
        if (!o.orbits) {
          pr.skipped.emplace_back(n, o.error);
          continue;
        }
        PairRecord rec{n, csp_check(*g.gf, *o.orbits)};
        if (!rec.verdict.holds && !failed) {
          failed = true;
          pr.first_failing_n = n;
          if (!rec.verdict.witnesses.empty()) pr.witness_d = rec.verdict.witnesses.front();
        }
        pr.records.push_back(std::move(rec));
      }
      if (pr.records.empty()) pr.status = "skipped";
      else pr.status = failed ? "fails" : "apparent-csp";
      if (pr.status == "skipped") ++report.skipped;
      else if (failed) ++report.failing;
      else ++report.apparent;
      report.pairs.push_back(std::move(pr));
    }
  }
  report.classes = dedupe(report);
  return report;
}

std::vector<DedupClass> dedupe(const ScanReport& report) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& pr : report.pairs) {
    if (pr.status != "apparent-csp") continue;
    std::ostringstream key;
    for (const auto& rec : pr.records) {
      key << "n=" << rec.n << ";sig=" << rec.verdict.signature << ";gf=" << rec.verdict.gf.min_exponent() << ':';
      for (std::int64_t c : rec.verdict.gf.raw_coeffs()) key << c << ',';
      key << '/';
    }
    groups[key.str()].push_back(pr.pair_key());
  }
  std::vector<DedupClass> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back({key, std::move(members)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
  return out;
}

std::vector<Observation> conjecture_suite(int n_max) {
  if (n_max > 10) throw Error(Errc::InvalidArgument, "conjecture suite is limited to n <= 10");
  std::vector<Observation> out;
  const auto& s373 = find_stat("st373");
  const auto& s317 = find_stat("st317");
  for (int n = 4; n <= n_max; ++n) {
    const bool eq = equidistribution(s373, s317, n);
    out.push_back({"equidistribution st373 st317", n, eq ? "true" : "false", eq});
  }
  const auto& s494 = find_stat("st494");
  for (int n = 4; n <= n_max; ++n) {
    const std::int64_t v = q_minus_one(s494, n);
    out.push_back({"q_minus_one st494", n, std::to_string(v), v == 0});
  }
  const auto& comp = find_map("complement");
  const std::pair<const char*, int> widths[] = {{"st021", 1}, {"st836", 2}, {"st1520", 3}};
  for (auto [key, k] : widths) {
    const auto& s = find_stat(key);
    for (int n = std::max(2, k + 1); n <= n_max; ++n) {
      const bool holds = csp_check(s, comp, n).holds;
      const bool predicted = n % (2 * k) != k;
      out.push_back({std::string("width-") + std::to_string(k) + " " + key + " under complement", n,
                     holds ? "holds" : "fails", holds == predicted});
    }
  }
  return out;
}

}  // namespace permsieve
