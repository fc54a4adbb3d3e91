#pragma once

// The acceptance suite: twelve oracle- and identity-based criteria, each run
// from an explicit seed.

#include <cstdint>
#include <string>
#include <vector>

namespace s2inf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Deterministic one-line summary of what was checked.
  std::string detail;
  double seconds = 0.0;
  /// Wall-clock budget for the criterion; not part of `passed`.
  double budget_seconds = 0.0;
};

/// Criteria 1 to 11.
std::vector<CriterionResult> run_core_criteria(std::uint64_t seed);

/// Criteria 1 to 12; criterion 12 reruns 1 to 11 and compares the rendered
/// reports byte for byte.
std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed);

/// Pass/fail matrix without timings, so equal seeds give equal bytes.
std::string render_report(std::vector<CriterionResult> const &results, std::uint64_t seed);

} // namespace s2inf
