#include "dblcat/error.hpp"

namespace dblcat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::BaseNotIso: return "BaseNotIso";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::MonadLawViolation: return "MonadLawViolation";
    case ErrorKind::MissingProducts: return "MissingProducts";
    case ErrorKind::PullbackUnavailable: return "PullbackUnavailable";
    case ErrorKind::PushoutUnavailable: return "PushoutUnavailable";
    case ErrorKind::ObjectOutOfBounds: return "ObjectOutOfBounds";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::IndexOutOfRange || kind == ErrorKind::DuplicateEntry || kind == ErrorKind::ParseError;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace dblcat
