#include "purelog/ops.hpp"

namespace purelog {

std::optional<OpType> op_type_from_name(std::string_view name) {
  if (name == "xfx") return OpType::XFX;
  if (name == "xfy") return OpType::XFY;
  if (name == "yfx") return OpType::YFX;
  if (name == "fy") return OpType::FY;
  if (name == "fx") return OpType::FX;
  if (name == "yf") return OpType::YF;
  if (name == "xf") return OpType::XF;
  return std::nullopt;
}

const char* to_string(OpType type) {
  switch (type) {
    case OpType::XFX: return "xfx";
    case OpType::XFY: return "xfy";
    case OpType::YFX: return "yfx";
    case OpType::FY: return "fy";
    case OpType::FX: return "fx";
    case OpType::YF: return "yf";
    case OpType::XF: return "xf";
  }
  return "?";
}

void OperatorTable::declare(int priority, OpType type, const std::string& name) {
  if (priority < 1 || priority > 1200) {
    throw PrologError(ErrorKind::Domain,
                      "operator priority " + std::to_string(priority) +
                          " outside 1..1200");
  }
  Entry& entry = table_[name];
  if (op_is_prefix(type)) {
    entry.prefix = OpDef{priority, type};
  } else {
    entry.infix_postfix = OpDef{priority, type};
  }
}

const OpDef* OperatorTable::prefix(std::string_view name) const {
  auto it = table_.find(std::string(name));
  if (it == table_.end() || !it->second.prefix) return nullptr;
  return &*it->second.prefix;
}

const OpDef* OperatorTable::infix(std::string_view name) const {
  auto it = table_.find(std::string(name));
  if (it == table_.end() || !it->second.infix_postfix) return nullptr;
  const OpDef* def = &*it->second.infix_postfix;
  return op_is_infix(def->type) ? def : nullptr;
}

const OpDef* OperatorTable::postfix(std::string_view name) const {
  auto it = table_.find(std::string(name));
  if (it == table_.end() || !it->second.infix_postfix) return nullptr;
  const OpDef* def = &*it->second.infix_postfix;
  return op_is_postfix(def->type) ? def : nullptr;
}

bool OperatorTable::is_operator(std::string_view name) const {
  return table_.find(std::string(name)) != table_.end();
}

OperatorTable OperatorTable::defaults() {
  OperatorTable t;
  t.declare(1200, OpType::XFX, ":-");
  t.declare(1200, OpType::FX, ":-");
  t.declare(1100, OpType::XFY, ";");
  t.declare(1050, OpType::XFY, "->");
  t.declare(1000, OpType::XFY, ",");
  t.declare(900, OpType::FY, "not");
  t.declare(700, OpType::XFX, "=");
  t.declare(700, OpType::XFX, "\\=");
  t.declare(700, OpType::XFX, "is");
  t.declare(700, OpType::XFX, "=..");
  t.declare(700, OpType::XFX, "=:=");
  t.declare(700, OpType::XFX, "=\\=");
  t.declare(700, OpType::XFX, "<");
  t.declare(700, OpType::XFX, ">");
  t.declare(700, OpType::XFX, "=<");
  t.declare(700, OpType::XFX, ">=");
  t.declare(500, OpType::YFX, "+");
  t.declare(500, OpType::YFX, "-");
  t.declare(400, OpType::YFX, "*");
  t.declare(400, OpType::YFX, "//");
  t.declare(200, OpType::FY, "-");
  return t;
}

}  // namespace purelog
