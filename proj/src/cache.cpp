#include "permsieve/cache.hpp"

#include <boost/crc.hpp>

#include <cstdlib>
#include <fstream>
#include <iterator>

#include "permsieve/error.hpp"

namespace permsieve {

namespace {

constexpr char kMagic[4] = {'P', 'S', 'R', 'C'};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

struct Reader {
  const std::string& buf;
  std::size_t at = 0;

  bool take(std::size_t k) { return at + k <= buf.size(); }

  std::optional<std::uint64_t> uint(int bytes) {
    if (!take(bytes)) return std::nullopt;
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[at + i])) << (8 * i);
    at += bytes;
    return v;
  }
};

std::string encode_payload(const std::vector<std::int64_t>& payload) {
  std::string out;
  for (std::int64_t x : payload) put_u64(out, static_cast<std::uint64_t>(x));
  return out;
}

}  // namespace

std::uint32_t crc32_of(const std::vector<std::int64_t>& payload) {
  const std::string bytes = encode_payload(payload);
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(Errc::IoFailure, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path Cache::record_path(const std::string& key, int n) const {
  return dir_ / (key + "_" + std::to_string(n) + ".rec");
}

Cache::Counters Cache::counters() const {
  std::lock_guard lock(mu_);
  return counters_;
}

std::optional<std::vector<std::int64_t>> Cache::load_raw(const std::string& key, int n) {
  const auto path = record_path(key, n);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::lock_guard lock(mu_);
    ++counters_.misses;
    return std::nullopt;
  }
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto corrupt = [&]() -> std::optional<std::vector<std::int64_t>> {
    std::lock_guard lock(mu_);
    ++counters_.corrupt;
    ++counters_.misses;
    return std::nullopt;
  };
  Reader r{buf};
  if (!r.take(4) || buf.compare(0, 4, kMagic, 4) != 0) return corrupt();
  r.at = 4;
  auto version = r.uint(4);
  if (!version || *version != kVersion) return corrupt();
  auto key_len = r.uint(4);
  if (!key_len || !r.take(*key_len) || buf.compare(r.at, *key_len, key) != 0 || *key_len != key.size()) return corrupt();
  r.at += *key_len;
  auto stored_n = r.uint(4);
  auto crc = r.uint(4);
  auto count = r.uint(8);
  if (!stored_n || static_cast<int>(*stored_n) != n || !crc || !count) return corrupt();
  if (buf.size() - r.at != *count * 8) return corrupt();
  std::vector<std::int64_t> payload;
  payload.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) payload.push_back(static_cast<std::int64_t>(*r.uint(8)));
  if (crc32_of(payload) != *crc) return corrupt();
  std::lock_guard lock(mu_);
  ++counters_.hits;
  return payload;
}

void Cache::store_raw(const std::string& key, int n, const std::vector<std::int64_t>& payload) {
  std::string out(kMagic, 4);
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(key.size()));
  out += key;
  put_u32(out, static_cast<std::uint32_t>(n));
  put_u32(out, crc32_of(payload));
  put_u64(out, payload.size());
  out += encode_payload(payload);

  std::lock_guard lock(mu_);
  const auto path = record_path(key, n);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f || !f.write(out.data(), static_cast<std::streamsize>(out.size()))) {
      throw Error(Errc::IoFailure, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::IoFailure, "cannot move " + tmp.string() + ": " + ec.message());
}

std::optional<IntPolynomial> Cache::load_gf(const std::string& stat_key, int n) {
  auto raw = load_raw("gf." + stat_key, n);
  if (!raw || raw->empty()) return std::nullopt;
  const int offset = static_cast<int>((*raw)[0]);
  return IntPolynomial::from_coeffs(std::vector<std::int64_t>(raw->begin() + 1, raw->end()), offset);
}

void Cache::store_gf(const std::string& stat_key, int n, const IntPolynomial& f) {
  std::vector<std::int64_t> payload{f.min_exponent()};
  payload.insert(payload.end(), f.raw_coeffs().begin(), f.raw_coeffs().end());
  store_raw("gf." + stat_key, n, payload);
}

std::optional<std::map<std::uint64_t, std::uint64_t>> Cache::load_orbits(const std::string& map_key, int n) {
  auto raw = load_raw("orbits." + map_key, n);
  if (!raw || raw->size() % 2 != 0) return std::nullopt;
  std::map<std::uint64_t, std::uint64_t> sizes;
  for (std::size_t i = 0; i < raw->size(); i += 2) {
    if ((*raw)[i] <= 0 || (*raw)[i + 1] <= 0) return std::nullopt;
    sizes[static_cast<std::uint64_t>((*raw)[i])] = static_cast<std::uint64_t>((*raw)[i + 1]);
  }
  return sizes;
}

void Cache::store_orbits(const std::string& map_key, int n, const std::map<std::uint64_t, std::uint64_t>& sizes) {
  std::vector<std::int64_t> payload;
  for (auto [size, count] : sizes) {
    payload.push_back(static_cast<std::int64_t>(size));
    payload.push_back(static_cast<std::int64_t>(count));
  }
  store_raw("orbits." + map_key, n, payload);
}

std::filesystem::path default_cache_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("PERMSIEVE_CACHE_DIR"); env && *env) return env;
  return fallback;
}

}  // namespace permsieve
