#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = permsieve::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  CHECK(run({"map", "apply", "corteel", "1,7,6,3,8,10,9,12,2,11,4,5"}).out == "1,10,12,2,7,6,9,8,5,11,4,3\n");
  CHECK(run({"stat", "eval", "st638", "53142"}).out == "4\n");
  const Outcome c = run({"csp", "check", "st039", "corteel", "--n", "5"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("holds\n", 0) == 0);
  CHECK(c.out.find("0\t120\t") != std::string::npos);
  CHECK(c.out.find("1\t16\t") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"csp", "check", "st539", "reverse", "--n", "4"}).code == 1);
  CHECK(run({"equidist", "st538", "st539", "--n", "4"}).code == 1);
  CHECK(run({"equidist", "st039", "st223", "--n", "5"}).code == 0);
  CHECK(run({"stat", "eval", "nope", "123"}).code == 2);
  CHECK(run({"stat", "eval", "st018", "1223"}).code == 2);
  CHECK(run({"stat", "gf"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"scan", "--min-n", "6", "--max-n", "4", "--no-cache"}).code == 2);
  CHECK(run({"scan", "--format", "xml", "--no-cache"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli gf and orbits") {
  CHECK(run({"stat", "gf", "st021", "--n", "3"}).out == "1 + 4q + q^2\n");
  CHECK(run({"map", "orbits", "lehmer_code_rotation", "--n", "4"}).out == "order 12\n12:2\n");
}

TEST_CASE("cli scan formats") {
  const std::vector<std::string> base{"scan", "--min-n", "3", "--max-n", "4", "--no-cache", "--stat", "st018", "--map", "rotation"};
  auto with = [&](std::string fmt) {
    auto a = base;
    a.push_back("--format");
    a.push_back(fmt);
    return run(a);
  };
  CHECK(with("json").out.find("\"pair\": \"st018|rotation\"") != std::string::npos);
  CHECK(with("csv").out.rfind("pair,stat,map,n,holds,signature,gf,fixed,status\n", 0) == 0);
  CHECK(with("md").out.find("| st018|rotation | 3 | yes |") != std::string::npos);
}

TEST_CASE("cli scan config file") {
  const auto path = std::filesystem::temp_directory_path() / "permsieve-cli-config.ini";
  {
    std::ofstream f(path);
    f << "# small scan\nmin-n = 3\nmax-n = 4\nformat = csv\nno-cache = true\nstat = st018\nmap = [rotation, reverse]\n";
  }
  const Outcome a = run({"scan", "--config", path.string()});
  CHECK(a.code == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 5);
  const Outcome b = run({"scan", "--config", path.string(), "--max-n", "3"});
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 3);
  {
    std::ofstream f(path);
    f << "bogus = 1\n";
  }
  CHECK(run({"scan", "--config", path.string()}).code == 2);
  std::filesystem::remove(path);
}
