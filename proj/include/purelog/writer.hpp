#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "purelog/ops.hpp"
#include "purelog/term.hpp"

namespace purelog {

// Names variables for display. Seeded names win; everything else gets
// _A, _B, ... in first-use order.
class VarNamer {
public:
  void reserve(const Term& var, std::string name);
  std::string name_for(const Term& var);

private:
  std::unordered_map<std::int64_t, std::string> names_;
  int counter_ = 0;
};

// Inverse of parsing against the operator table in force: operator notation
// with minimal parentheses, lists in bracket sugar, atoms quoted when their
// spelling demands it. Without a namer, variables print their source name.
std::string write_term(const TermPtr& t, const OperatorTable& table,
                       int max_priority = 1200, VarNamer* namer = nullptr);

}  // namespace purelog
