#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace contring {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::json details;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  bool within_budget() const noexcept { return seconds < budget_seconds; }
};

struct SuiteResult {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;

  bool passed() const noexcept;
  /// Timings are left out unless asked for, so that equal seeds give equal
  /// bytes.
  nlohmann::json to_json(bool with_timings = false) const;
};

/// Number of numbered criteria, including the determinism rerun.
inline constexpr int kCriterionCount = 13;

/// One criterion of the battery (1..12).
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Criteria 1..12, then criterion 13, which reruns 1..12 and compares the
/// serialized reports byte for byte.
SuiteResult run_verify_suite(std::uint64_t seed, bool include_determinism = true);

}  // namespace contring
