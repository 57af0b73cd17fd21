#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dblcat {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateEntry,
  ParseError,
  CodomainMismatch,
  DomainMismatch,
  BaseNotIso,
  NotComposable,
  BoundaryMismatch,
  LawViolation,
  MonadLawViolation,
  MissingProducts,
  PullbackUnavailable,
  PushoutUnavailable,
  ObjectOutOfBounds,
};

std::string_view to_string(ErrorKind kind);

// True for the kinds that signal a malformed description rather than a failed check.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dblcat
