#include <cstring>
#include <iostream>
#include <string>

#include "permsieve/acceptance.hpp"

int main(int argc, char** argv) {
  permsieve::AcceptanceOptions options;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--scratch") == 0) options.scratch = argv[++i];
    else if (std::strcmp(argv[i], "--workers") == 0) options.workers = std::stoi(argv[++i]);
  }
  int failed = 0;
  options.on_result = [&](const permsieve::CriterionResult& r) {
    failed += r.pass ? 0 : 1;
    std::cout << permsieve::format_result(r) << std::flush;
  };
  const auto results = permsieve::run_acceptance(options);
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
