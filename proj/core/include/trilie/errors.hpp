#pragma once

#include <stdexcept>
#include <string>

namespace trilie {

/// Machine-readable failure categories surfaced by the CLI as named errors.
enum class ErrorKind {
  Parse,
  ShapeMismatch,
  IndexRange,
  SignConflict,
  DivisionByZero,
  NotInvolutive,
  NotDerivation,
  NotAdapted,
  RepresentationAxiom,
  FiViolation,
  ClosedFormMismatch,
  Construction,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace trilie
