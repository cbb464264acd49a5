#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dbm {

inline constexpr std::uint64_t kDefaultAcceptanceSeed = 20240611;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  ///< 0 = no runtime limit
};

inline constexpr int kCriterionCount = 9;

/// Runs one criterion (1..9). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultAcceptanceSeed);

/// Runs every criterion in order, calling on_result after each.
std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed = kDefaultAcceptanceSeed,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  [3] title (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace dbm
