#include "sheafex/error.hpp"

namespace sheafex {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedDimension: return "MixedDimension";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::DisjointnessViolated: return "DisjointnessViolated";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::EmbeddingInvalid: return "EmbeddingInvalid";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t cap, std::uint64_t count)
    : Error(ErrorKind::BudgetExceeded,
            what + " (cap " + std::to_string(cap) + ", count " + std::to_string(count) + ")"),
      cap_(cap),
      count_(count) {}

}  // namespace sheafex
