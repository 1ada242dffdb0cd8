#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind {
  ZeroVector,
  NotSquare,
  NotSimplicial,
  FanAxiomViolation,
  DuplicateRay,
  NonPrimitiveRay,
  InvalidDimension,
  NotComplete,
  NotFullDimensional,
  NotElliptic,
  PreconditionFailed,
  InvalidWeights,
  InvalidSpec,
  ConeNotFound,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric
