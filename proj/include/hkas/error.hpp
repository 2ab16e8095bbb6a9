#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hkas {

enum class ErrorCode {
  // graph structure
  CycleDetected,
  SelfLoop,
  DanglingEdge,
  DuplicateLabel,
  DuplicateEdge,
  InvalidLabel,
  EmptyGraph,
  UnknownClass,
  DuplicateInSequence,
  // distributions
  UnknownVariable,
  EmptyVariableSet,
  OverlappingVariableSets,
  // scheme ingestion
  ParseError,
  VariableMismatch,
  ProbabilityError,
  GraphError,
  // queries and checks
  InvalidCoalition,
  CoalitionSpaceTooLarge,
  // generators
  SupportTooLarge,
  InvalidLeak,
  InvalidPair,
  InvalidParameter,
  // harness
  PreconditionFailed,
  TheoremViolation,
  // expression parser
  SyntaxError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the error kind;
/// `what()` carries a human-readable message prefixed with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by graph validation; carries one directed cycle, first label repeated last.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Raised by the expression parser; `position()` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hkas
