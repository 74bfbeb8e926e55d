#include "purelog/writer.hpp"

#include <cctype>
#include <charconv>

namespace purelog {

void VarNamer::reserve(const Term& var, std::string name) {
  names_.emplace(var.var_id(), std::move(name));
}

std::string VarNamer::name_for(const Term& var) {
  auto it = names_.find(var.var_id());
  if (it != names_.end()) return it->second;
  int n = counter_++;
  std::string name = "_";
  name += static_cast<char>('A' + n % 26);
  if (n >= 26) name += std::to_string(n / 26);
  names_.emplace(var.var_id(), name);
  return names_[var.var_id()];
}

namespace {

bool is_symbol_char(char c) {
  static const std::string symbols = "+-*/\\^<>=~:.?@#&$";
  return symbols.find(c) != std::string::npos;
}

bool all_symbolic(const std::string& s) {
  for (char c : s) {
    if (!is_symbol_char(c)) return false;
  }
  return true;
}

bool plain_atom(const std::string& s) {
  if (s.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool needs_quotes(const std::string& s) {
  if (plain_atom(s)) return false;
  if (s == "[]" || s == "!" || s == ";") return false;
  if (s == ".") return true;  // would lex as an end token
  if (!s.empty() && all_symbolic(s)) return false;
  return true;
}

std::string quote_atom(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    out += c;
    if (c == '\'') out += c;
  }
  return out + "'";
}

std::string float_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  if (s.find("inf") != std::string::npos || s.find("nan") != std::string::npos) {
    return s;
  }
  if (s.find('.') == std::string::npos) {
    auto e = s.find('e');
    if (e == std::string::npos) {
      s += ".0";
    } else {
      s.insert(e, ".0");
    }
  }
  return s;
}

class Writer {
public:
  Writer(const OperatorTable& table, VarNamer* namer)
      : table_(table), namer_(namer) {}

  std::string take() { return std::move(out_); }

  void write(const TermPtr& t, int max_priority) {
    switch (t->tag()) {
      case TermTag::Var:
        emit(namer_ ? namer_->name_for(*t)
                    : (t->name().empty() || t->name() == "_"
                           ? "_G" + std::to_string(t->var_id())
                           : t->name()));
        return;
      case TermTag::Int:
        emit(std::to_string(t->int_value()));
        return;
      case TermTag::Float:
        emit(float_text(t->float_value()));
        return;
      case TermTag::Const:
        // a bare prefix-operator atom would swallow whatever follows it
        if (table_.prefix(t->name()) != nullptr) {
          emit_punct("(");
          emit(needs_quotes(t->name()) ? quote_atom(t->name()) : t->name());
          emit_punct(")");
          return;
        }
        emit(needs_quotes(t->name()) ? quote_atom(t->name()) : t->name());
        return;
      case TermTag::Compound:
        write_compound(t, max_priority);
        return;
    }
  }

private:
  void write_compound(const TermPtr& t, int max_priority) {
    if (t->name() == "." && t->arity() == 2) {
      write_list(t);
      return;
    }
    if (t->arity() == 2) {
      if (const OpDef* in = table_.infix(t->name())) {
        int lmax = in->type == OpType::YFX ? in->priority : in->priority - 1;
        int rmax = in->type == OpType::XFY ? in->priority : in->priority - 1;
        bool parens = in->priority > max_priority;
        if (parens) emit_punct("(");
        write(t->args()[0], lmax);
        if (t->name() == ",") {
          emit_punct(",");
        } else {
          emit(needs_quotes(t->name()) ? quote_atom(t->name()) : t->name());
        }
        write(t->args()[1], rmax);
        if (parens) emit_punct(")");
        return;
      }
    }
    if (t->arity() == 1) {
      if (const OpDef* pre = table_.prefix(t->name())) {
        // -(5) in operator form would read back as the literal -5
        bool numeric_arg = t->args()[0]->is_number();
        if (!(t->name() == "-" && numeric_arg)) {
          int amax = pre->type == OpType::FY ? pre->priority : pre->priority - 1;
          bool parens = pre->priority > max_priority;
          if (parens) emit_punct("(");
          emit(needs_quotes(t->name()) ? quote_atom(t->name()) : t->name());
          if (needs_arg_parens(t->args()[0], amax)) {
            out_ += " (";
            last_ = Class::Punct;
            write(t->args()[0], 1200);
            emit_punct(")");
          } else {
            // "not(" would read as functional application, so keep the
            // operator name apart from an operand that opens with a paren
            if (opens_with_paren(t->args()[0], amax)) {
              out_ += ' ';
              last_ = Class::None;
            }
            write(t->args()[0], amax);
          }
          if (parens) emit_punct(")");
          return;
        }
      }
      if (const OpDef* post = table_.postfix(t->name())) {
        int amax = post->type == OpType::YF ? post->priority : post->priority - 1;
        bool parens = post->priority > max_priority;
        if (parens) emit_punct("(");
        write(t->args()[0], amax);
        emit(needs_quotes(t->name()) ? quote_atom(t->name()) : t->name());
        if (parens) emit_punct(")");
        return;
      }
    }
    emit(needs_quotes(t->name()) ? quote_atom(t->name()) : t->name());
    emit_punct("(");
    for (std::size_t i = 0; i < t->arity(); ++i) {
      if (i) emit_punct(",");
      write(t->args()[i], 999);
    }
    emit_punct(")");
  }

  // a grouped prefix argument must not glue the '(' onto the operator name
  bool needs_arg_parens(const TermPtr& arg, int amax) {
    if (!arg->is_compound()) return false;
    int prio = term_priority(arg);
    return prio > amax;
  }

  bool opens_with_paren(const TermPtr& t, int max_priority) {
    if (t->is_const()) return table_.prefix(t->name()) != nullptr;
    if (!t->is_compound()) return false;
    if (t->name() == "." && t->arity() == 2) return false;
    if (term_priority(t) > max_priority) return true;
    if (t->arity() == 2) {
      if (const OpDef* in = table_.infix(t->name())) {
        int lmax = in->type == OpType::YFX ? in->priority : in->priority - 1;
        return opens_with_paren(t->args()[0], lmax);
      }
    }
    if (t->arity() == 1) {
      if (table_.prefix(t->name()) != nullptr) return false;
      if (const OpDef* post = table_.postfix(t->name())) {
        int amax = post->type == OpType::YF ? post->priority : post->priority - 1;
        return opens_with_paren(t->args()[0], amax);
      }
    }
    return false;
  }

  int term_priority(const TermPtr& t) {
    if (!t->is_compound()) return 0;
    if (t->name() == "." && t->arity() == 2) return 0;
    if (t->arity() == 2) {
      if (const OpDef* in = table_.infix(t->name())) return in->priority;
    }
    if (t->arity() == 1) {
      if (const OpDef* pre = table_.prefix(t->name())) {
        if (!(t->name() == "-" && t->args()[0]->is_number())) {
          return pre->priority;
        }
      }
      if (const OpDef* post = table_.postfix(t->name())) return post->priority;
    }
    return 0;
  }

  void write_list(const TermPtr& t) {
    emit_punct("[");
    write(t->args()[0], 999);
    TermPtr rest = t->args()[1];
    while (rest->is_compound() && rest->name() == "." && rest->arity() == 2) {
      emit_punct(",");
      write(rest->args()[0], 999);
      rest = rest->args()[1];
    }
    if (!is_nil(rest)) {
      emit_punct("|");
      write(rest, 999);
    }
    emit_punct("]");
  }

  enum class Class { None, Alnum, Symbolic, Punct, Quote };

  static Class class_of_char(char c) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      return Class::Alnum;
    }
    if (is_symbol_char(c)) return Class::Symbolic;
    if (c == '\'') return Class::Quote;
    return Class::Punct;
  }

  // inserts a space only where adjacent tokens would lex as one
  void emit(const std::string& token) {
    if (token.empty()) return;
    Class head = class_of_char(token.front());
    if ((last_ == Class::Alnum && head == Class::Alnum) ||
        (last_ == Class::Symbolic && head == Class::Symbolic)) {
      out_ += ' ';
    }
    out_ += token;
    last_ = class_of_char(token.back());
  }

  void emit_punct(const char* token) {
    out_ += token;
    last_ = Class::Punct;
  }

  const OperatorTable& table_;
  VarNamer* namer_;
  std::string out_;
  Class last_ = Class::None;
};

}  // namespace

std::string write_term(const TermPtr& t, const OperatorTable& table,
                       int max_priority, VarNamer* namer) {
  Writer writer(table, namer);
  writer.write(t, max_priority);
  return writer.take();
}

}  // namespace purelog
