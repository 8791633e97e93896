#include <doctest.h>

#include <fstream>
#include <random>

#include "permsieve/cache.hpp"
#include "permsieve/generating_functions.hpp"
#include "permsieve/report.hpp"
#include "permsieve/scan.hpp"

using namespace permsieve;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("permsieve-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const ScanFilters small{{"st018", "st039", "st021"}, {"reverse", "rotation", "corteel"}};

}  // namespace

TEST_CASE("gf round trip") {
  TempDir dir;
  Cache cache(dir.path);
  const IntPolynomial f = mahonian_gf(6);
  cache.store_gf("st018", 6, f);
  CHECK(fs::exists(dir.path / "gf.st018_6.rec"));
  CHECK(cache.load_gf("st018", 6) == f);
  const IntPolynomial laurent = IntPolynomial::from_coeffs({3, 0, 2}, -4);
  cache.store_gf("neg", 3, laurent);
  CHECK(cache.load_gf("neg", 3) == laurent);
  CHECK_FALSE(cache.load_gf("st018", 5).has_value());
  CHECK(cache.counters().hits == 2);
  CHECK(cache.counters().misses == 1);
}

TEST_CASE("orbit record round trip") {
  TempDir dir;
  Cache cache(dir.path);
  const std::map<std::uint64_t, std::uint64_t> sizes{{1, 8}, {2, 8}};
  cache.store_orbits("corteel", 4, sizes);
  CHECK(cache.load_orbits("corteel", 4) == sizes);
}

TEST_CASE("corrupt records are never trusted") {
  TempDir dir;
  Cache cache(dir.path);
  cache.store_gf("st018", 5, mahonian_gf(5));
  const fs::path rec = cache.record_path("gf.st018", 5);
  const auto full = fs::file_size(rec);

  SUBCASE("truncated") { fs::resize_file(rec, full - 5); }
  SUBCASE("flipped payload byte") {
    std::fstream f(rec, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(static_cast<std::streamoff>(full) - 3);
    f.put('\x7f');
  }
  SUBCASE("bad magic") {
    std::fstream f(rec, std::ios::in | std::ios::out | std::ios::binary);
    f.put('X');
  }
  CHECK_FALSE(cache.load_gf("st018", 5).has_value());
  CHECK(cache.counters().corrupt == 1);
}

TEST_CASE("scan with a corrupted cache matches a clean scan") {
  TempDir dir;
  const std::string clean = render(scan(3, 5, small), Format::Json);
  {
    Cache cache(dir.path);
    CHECK(render(scan(3, 5, small, {2, &cache}), Format::Json) == clean);
  }
  for (const auto& entry : fs::directory_iterator(dir.path)) fs::resize_file(entry.path(), 20);
  Cache cache(dir.path);
  CHECK(render(scan(3, 5, small, {1, &cache}), Format::Json) == clean);
  CHECK(cache.counters().corrupt > 0);
  Cache again(dir.path);
  CHECK(render(scan(3, 5, small, {3, &again}), Format::Json) == clean);
  CHECK(again.counters().corrupt == 0);
}

TEST_CASE("scan classification") {
  const ScanReport r = scan(4, 6, small);
  CHECK(r.pairs.size() == 9);
  CHECK(r.apparent + r.failing + r.skipped == 9);
  for (const auto& p : r.pairs) {
    if (p.pair_key() == "st039|corteel" || p.pair_key() == "st018|rotation" || p.pair_key() == "st018|reverse") {
      CHECK(p.status == "apparent-csp");
    }
  }
  const ScanReport inv = scan(4, 6, {{}, {"inverse"}});
  for (const auto& p : inv.pairs) CHECK(p.status != "apparent-csp");
  const ScanReport one = scan(1, 1);
  CHECK(one.failing == 0);
  CHECK_THROWS_AS(scan(0, 3), Error);
  CHECK_THROWS_AS(scan(5, 4), Error);
}

TEST_CASE("dedup classes") {
  const ScanReport r = scan(4, 6, {{"st018", "st039", "st223", "st356", "st358"}, {"reverse", "complement", "corteel", "alexandersson_kebede"}});
  auto class_of = [&](const std::string& key) -> const DedupClass* {
    for (const auto& c : r.classes) {
      if (std::find(c.members.begin(), c.members.end(), key) != c.members.end()) return &c;
    }
    return nullptr;
  };
  REQUIRE(class_of("st018|reverse") != nullptr);
  CHECK(class_of("st018|reverse") == class_of("st018|complement"));
  REQUIRE(class_of("st039|corteel") != nullptr);
  for (const char* s : {"st223|corteel", "st356|corteel", "st358|corteel"}) CHECK(class_of(s) == class_of("st039|corteel"));
  std::size_t members = 0;
  for (const auto& c : r.classes) members += c.members.size();
  CHECK(members == r.apparent);
}

TEST_CASE("report views share one report") {
  const ScanReport r = scan(3, 4, small);
  const auto json = nlohmann::json::parse(render(r, Format::Json));
  for (const auto& rec : json["records"]) {
    for (const char* k : {"pair", "n", "holds", "table", "signature", "gf"}) CHECK(rec.contains(k));
  }
  const std::string csv = render(r, Format::Csv);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(static_cast<std::size_t>(lines) == json["records"].size() + 1);
  const std::string md = render(r, Format::Markdown);
  CHECK(md.find("| st018|rotation | 4 | yes |") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
