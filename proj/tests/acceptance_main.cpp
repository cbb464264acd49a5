// One line per acceptance criterion; exit status 0 only if all pass.
#include <cstdlib>
#include <iostream>
#include <string>

#include "dbm/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = dbm::kDefaultAcceptanceSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  int failed = 0;
  dbm::run_acceptance(seed, [&](const dbm::CriterionResult& r) {
    std::cout << dbm::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (dbm::kCriterionCount - failed) << "/" << dbm::kCriterionCount << " acceptance criteria passed"
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
