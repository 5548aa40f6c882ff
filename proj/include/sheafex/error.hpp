#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sheafex {

enum class ErrorKind {
  MixedDimension,
  EmptyInput,
  BadDimension,
  BudgetExceeded,
  ConvergenceFailure,
  PreconditionViolated,
  NotSubgroup,
  TypeMismatch,
  NotCocycle,
  DisjointnessViolated,
  NotPrimePower,
  EmbeddingInvalid,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/** Raised when an enumeration would emit more than `cap` objects. */
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t cap, std::uint64_t count);
  std::uint64_t cap() const { return cap_; }
  // Number of objects seen (or required) when the cap was hit.
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t cap_;
  std::uint64_t count_;
};

// Default cap on emitted objects for cycle enumeration and similar scans.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;
// Default cap on cochain enumeration.
inline constexpr std::uint64_t kDefaultCochainBudget = std::uint64_t{1} << 20;

}  // namespace sheafex
