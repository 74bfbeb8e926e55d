#include "purelog/errors.hpp"

namespace purelog {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Instantiation: return "instantiation";
    case ErrorKind::Type: return "type";
    case ErrorKind::Existence: return "existence";
    case ErrorKind::Permission: return "permission";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Arithmetic: return "arithmetic";
    case ErrorKind::Cyclic: return "cyclic";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

PrologError::PrologError(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

std::string PrologError::display() const {
  return std::string("Error: ") + to_string(kind_) + ": " + detail_;
}

}  // namespace purelog
