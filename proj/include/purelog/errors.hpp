#pragma once

#include <stdexcept>
#include <string>

namespace purelog {

enum class ErrorKind {
  Syntax,
  Instantiation,
  Type,
  Existence,
  Permission,
  Domain,
  Arithmetic,
  Cyclic,
  Resource,
  Io,
};

const char* to_string(ErrorKind kind);

class PrologError : public std::runtime_error {
public:
  PrologError(ErrorKind kind, std::string detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

  // "Error: <kind>: <detail>", the one-line form the REPL prints
  std::string display() const;

private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace purelog
