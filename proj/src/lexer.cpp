#include "purelog/lexer.hpp"

#include <cctype>
#include <charconv>

namespace purelog {

namespace {

bool is_symbol_char(char c) {
  static const std::string symbols = "+-*/\\^<>=~:.?@#&$";
  return symbols.find(c) != std::string::npos;
}

bool is_alnum_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string pos_prefix(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      bool layout = skip_layout();
      if (at_end()) break;
      Token tok = next_token();
      tok.layout_before = layout;
      tokens.push_back(std::move(tok));
    }
    return tokens;
  }

private:
  bool at_end() const { return index_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return index_ + ahead < src_.size() ? src_[index_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[index_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  bool skip_layout() {
    bool skipped = false;
    for (;;) {
      if (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
        skipped = true;
        continue;
      }
      if (!at_end() && peek() == '%') {
        while (!at_end() && peek() != '\n') advance();
        skipped = true;
        continue;
      }
      return skipped;
    }
  }

  [[noreturn]] void fail(SourcePos pos, const std::string& message) {
    throw PrologError(ErrorKind::Syntax, pos_prefix(pos) + message);
  }

  Token next_token() {
    SourcePos start = pos_;
    char c = peek();

    if (std::isdigit(static_cast<unsigned char>(c))) return number(start);
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      return named(TokenKind::Variable, start);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      return named(TokenKind::Name, start);
    }
    if (c == '\'') return quoted_atom(start);
    if (c == '!' || c == ';') {
      advance();
      return Token{TokenKind::Name, std::string(1, c), start};
    }
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '|') {
      advance();
      return Token{TokenKind::Punct, std::string(1, c), start};
    }
    if (is_symbol_char(c)) return symbolic(start);
    fail(start, std::string("unexpected character '") + c + "'");
  }

  Token named(TokenKind kind, SourcePos start) {
    std::string text;
    while (!at_end() && is_alnum_char(peek())) text += advance();
    return Token{kind, std::move(text), start};
  }

  Token symbolic(SourcePos start) {
    std::string text;
    while (!at_end() && is_symbol_char(peek())) text += advance();
    if (text == ".") {
      char after = peek();
      if (after == '\0' || after == '%' ||
          std::isspace(static_cast<unsigned char>(after))) {
        return Token{TokenKind::End, ".", start};
      }
    }
    return Token{TokenKind::Name, std::move(text), start};
  }

  Token quoted_atom(SourcePos start) {
    advance();  // opening quote
    std::string text;
    for (;;) {
      if (at_end()) fail(start, "unterminated quoted atom");
      char c = advance();
      if (c == '\'') {
        if (peek() == '\'') {
          advance();
          text += '\'';
          continue;
        }
        break;
      }
      text += c;
    }
    Token tok{TokenKind::Name, std::move(text), start};
    tok.quoted = true;
    return tok;
  }

  Token number(SourcePos start) {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += advance();
    }
    bool is_float = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_float = true;
      digits += advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += advance();
      }
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t lookahead = 1;
      if (peek(1) == '+' || peek(1) == '-') lookahead = 2;
      if (std::isdigit(static_cast<unsigned char>(peek(lookahead)))) {
        is_float = true;
        digits += advance();
        if (peek() == '+' || peek() == '-') digits += advance();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          digits += advance();
        }
      }
    }

    Token tok{is_float ? TokenKind::Float : TokenKind::Integer, digits, start};
    if (is_float) {
      tok.float_value = std::strtod(digits.c_str(), nullptr);
    } else {
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                       tok.int_value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        fail(start, "integer literal '" + digits + "' out of range");
      }
    }
    return tok;
  }

  std::string_view src_;
  std::size_t index_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) { return Lexer(src).run(); }

}  // namespace purelog
