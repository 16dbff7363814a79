#pragma once

#include <stdexcept>
#include <string>

namespace tp {

enum class ErrorKind {
  CycleDetected,
  UnknownIdentifier,
  DuplicateIdentifier,
  NotComparable,
  IllegalMove,
  FunctorLawViolation,
  FunctorialityFailure,
  MissingLabel,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace tp
