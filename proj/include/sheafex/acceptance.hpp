#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sheafex {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
  bool passed() const { return checks_passed && seconds <= limit_seconds; }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::vector<int> only;  // empty: all criteria
};

inline constexpr int kCriterionCount = 12;

// Runs one acceptance criterion; exceptions are reported as failures.
CriterionResult run_criterion(int id, const SuiteOptions& options);

std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3  <title>  (0.12 s / 1 s)  <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace sheafex
