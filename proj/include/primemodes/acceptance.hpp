#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace primemodes {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  std::set<int> only;  // empty = all
};

/// Runs the exit criteria and returns one result per criterion, in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

inline constexpr int kCriterionCount = 12;

}  // namespace primemodes
