#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "purelog/errors.hpp"

namespace purelog {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class TokenKind {
  Name,      // atoms, symbolic names, quoted atoms, solo ! and ;
  Variable,  // upper-case or underscore start
  Integer,
  Float,
  Punct,  // ( ) [ ] , |
  End,    // clause-terminating .
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  bool layout_before = false;  // whitespace or comment ran right before
  bool quoted = false;
  std::int64_t int_value = 0;
  double float_value = 0.0;
};

// Throws ErrorKind::Syntax with line:column detail on lexical faults.
std::vector<Token> tokenize(std::string_view src);

}  // namespace purelog
