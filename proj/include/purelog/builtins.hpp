#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "purelog/term.hpp"

namespace purelog {

struct BuiltinInfo {
  std::string_view name;
  std::size_t arity;
  bool deterministic;
};

const std::vector<BuiltinInfo>& builtin_table();
bool is_builtin(std::string_view name, std::size_t arity);

// Value of a ground arithmetic expression.
struct Number {
  bool is_float = false;
  std::int64_t ival = 0;
  double fval = 0.0;

  double as_double() const { return is_float ? fval : static_cast<double>(ival); }
};

// Evaluates +, -, *, // and unary - over integers and floats. Unbound
// subterms raise instantiation errors, non-numeric leaves type errors,
// overflow and zero division arithmetic errors.
Number eval_gae(const TermPtr& t, const Bindings& bindings);

TermPtr number_term(const Number& n);

}  // namespace purelog
