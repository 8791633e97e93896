#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "permsieve/polynomial.hpp"

namespace permsieve {

/// One record per (key, n) under `dir`, named <key>_<n>.rec:
///   "PSRC" | u32 version | u32 key length | key | i32 n | u32 crc32 |
///   u64 payload length | payload as little-endian int64.
/// The checksum covers the payload. Records that fail to parse are reported
/// as misses and rewritten by the caller.
class Cache {
 public:
  static constexpr std::uint32_t kVersion = 1;

  explicit Cache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::optional<IntPolynomial> load_gf(const std::string& stat_key, int n);
  void store_gf(const std::string& stat_key, int n, const IntPolynomial& f);

  std::optional<std::map<std::uint64_t, std::uint64_t>> load_orbits(const std::string& map_key, int n);
  void store_orbits(const std::string& map_key, int n, const std::map<std::uint64_t, std::uint64_t>& sizes);

  std::filesystem::path record_path(const std::string& key, int n) const;

  struct Counters {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t corrupt = 0;
  };
  Counters counters() const;

  /// Lower-level access, exposed for tests.
  std::optional<std::vector<std::int64_t>> load_raw(const std::string& key, int n);
  void store_raw(const std::string& key, int n, const std::vector<std::int64_t>& payload);

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
  Counters counters_;
};

/// Cache directory from PERMSIEVE_CACHE_DIR, else `fallback`.
std::filesystem::path default_cache_dir(const std::filesystem::path& fallback = "cache");

std::uint32_t crc32_of(const std::vector<std::int64_t>& payload);

}  // namespace permsieve
