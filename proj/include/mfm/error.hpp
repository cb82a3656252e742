#pragma once

#include <stdexcept>
#include <string>

namespace mfm {

enum class ErrorCode {
  InvalidIdentifier,
  DuplicateVertexName,
  UnknownEndpoint,
  DuplicateEdge,
  SelfLoopEdge,
  StateExclusivity,
  StatefulPattern,
  NotRangeRestricted,
  SignatureMismatch,
  NonHornFormula,
  SyntaxError,
  SemanticError,
  MalformedClauseSet,
  CycleDetected,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mfm
