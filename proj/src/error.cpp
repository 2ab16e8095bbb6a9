#include "hkas/error.hpp"

#include <utility>

namespace hkas {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::DuplicateInSequence: return "DuplicateInSequence";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::EmptyVariableSet: return "EmptyVariableSet";
    case ErrorCode::OverlappingVariableSets: return "OverlappingVariableSets";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::ProbabilityError: return "ProbabilityError";
    case ErrorCode::GraphError: return "GraphError";
    case ErrorCode::InvalidCoalition: return "InvalidCoalition";
    case ErrorCode::CoalitionSpaceTooLarge: return "CoalitionSpaceTooLarge";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::InvalidLeak: return "InvalidLeak";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string describe_cycle(const std::vector<std::string>& cycle) {
  std::string text = "cycle";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    text += i == 0 ? " " : " -> ";
    text += cycle[i];
  }
  return text;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error(ErrorCode::CycleDetected, describe_cycle(cycle)), cycle_(std::move(cycle)) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorCode::SyntaxError, "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace hkas
