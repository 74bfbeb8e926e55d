#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "purelog/errors.hpp"

namespace purelog {

enum class OpType { XFX, XFY, YFX, FY, FX, YF, XF };

std::optional<OpType> op_type_from_name(std::string_view name);
const char* to_string(OpType type);

inline bool op_is_prefix(OpType t) { return t == OpType::FY || t == OpType::FX; }
inline bool op_is_postfix(OpType t) { return t == OpType::YF || t == OpType::XF; }
inline bool op_is_infix(OpType t) { return !op_is_prefix(t) && !op_is_postfix(t); }

struct OpDef {
  int priority = 0;
  OpType type = OpType::XFX;
};

// A name can carry one prefix definition plus one infix-or-postfix one.
class OperatorTable {
public:
  // Throws ErrorKind::Domain for a priority outside 1..1200.
  void declare(int priority, OpType type, const std::string& name);

  const OpDef* prefix(std::string_view name) const;
  const OpDef* infix(std::string_view name) const;
  const OpDef* postfix(std::string_view name) const;
  bool is_operator(std::string_view name) const;

  static OperatorTable defaults();

private:
  struct Entry {
    std::optional<OpDef> prefix;
    std::optional<OpDef> infix_postfix;
  };
  std::unordered_map<std::string, Entry> table_;
};

}  // namespace purelog
