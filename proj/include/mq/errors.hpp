#pragma once

#include <stdexcept>
#include <string>

namespace mq {

enum class ErrorCode {
  // group validation
  NotAssociative,
  NoIdentity,
  NoInverse,
  SizeLimitExceeded,
  // multi-rack construction and morphisms
  AxiomViolation,
  EmptyLabelSet,
  ShapeMismatch,
  SearchLimitExceeded,
  LabelNotFound,
  // constructions from group data
  NotAutomorphism,
  NotCommuting,
  NotInvertible,
  SNotInCenter,
  WellDefinednessFailure,
  // knot diagrams
  MalformedPD,
  ArcCountMismatch,
  // file / value shape problems
  MalformedInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mq
