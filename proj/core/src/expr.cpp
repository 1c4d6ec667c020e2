#include "pathgen/expr.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace pathgen {

namespace {

constexpr FuncInfo kFuncs[] = {
    {"sin", Func::Sin, 1},  {"cos", Func::Cos, 1},  {"sqrt", Func::Sqrt, 1},
    {"abs", Func::Abs, 1},  {"exp", Func::Exp, 1},  {"log", Func::Log, 1},
    {"pow", Func::Pow, 2},  {"min", Func::Min, 2},  {"max", Func::Max, 2},
};

}  // namespace

const FuncInfo* func_by_name(std::string_view name) {
  for (const auto& f : kFuncs) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const FuncInfo& func_info(Func f) {
  for (const auto& fi : kFuncs) {
    if (fi.id == f) return fi;
  }
  assert(false && "unregistered function");
  return kFuncs[0];
}

NumExprPtr NumExpr::constant(double v) {
  auto e = std::make_shared<NumExpr>();
  e->kind = NumKind::Const;
  e->value = v;
  return e;
}

NumExprPtr NumExpr::var(std::string name) {
  auto e = std::make_shared<NumExpr>();
  e->kind = NumKind::Var;
  e->name = std::move(name);
  return e;
}

namespace {

std::shared_ptr<NumExpr> make_node(NumKind kind, std::vector<NumExprPtr> args) {
  auto e = std::make_shared<NumExpr>();
  e->kind = kind;
  e->args = std::move(args);
  return e;
}

}  // namespace

NumExprPtr NumExpr::neg(NumExprPtr e) { return make_node(NumKind::Neg, {std::move(e)}); }
NumExprPtr NumExpr::add(NumExprPtr l, NumExprPtr r) {
  return make_node(NumKind::Add, {std::move(l), std::move(r)});
}
NumExprPtr NumExpr::sub(NumExprPtr l, NumExprPtr r) {
  return make_node(NumKind::Sub, {std::move(l), std::move(r)});
}
NumExprPtr NumExpr::mul(NumExprPtr l, NumExprPtr r) {
  return make_node(NumKind::Mul, {std::move(l), std::move(r)});
}
NumExprPtr NumExpr::div(NumExprPtr l, NumExprPtr r) {
  return make_node(NumKind::Div, {std::move(l), std::move(r)});
}

NumExprPtr NumExpr::call(Func f, std::vector<NumExprPtr> args) {
  assert(static_cast<int>(args.size()) == func_info(f).arity);
  auto e = make_node(NumKind::Call, std::move(args));
  e->func = f;
  return e;
}

bool equal(const NumExpr& a, const NumExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NumKind::Const:
      // Bit-for-bit on the common path; NaN never equals NaN by design.
      return a.value == b.value;
    case NumKind::Var:
      return a.name == b.name;
    case NumKind::Call:
      if (a.func != b.func) return false;
      break;
    default:
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

std::string_view rel_op_text(RelOp op) {
  switch (op) {
    case RelOp::Le: return "<=";
    case RelOp::Lt: return "<";
    case RelOp::Ge: return ">=";
    case RelOp::Gt: return ">";
    case RelOp::Eq: return "==";
    case RelOp::Ne: return "!=";
  }
  return "<=";
}

bool equal(const Predicate& a, const Predicate& b) {
  return a.op == b.op && equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
}

PathConditionPtr PathCondition::leaf(Predicate p) {
  auto c = std::make_shared<PathCondition>();
  c->kind = CondKind::Leaf;
  c->pred = std::move(p);
  return c;
}

PathConditionPtr PathCondition::conj(std::vector<PathConditionPtr> children) {
  assert(children.size() >= 2);
  auto c = std::make_shared<PathCondition>();
  c->kind = CondKind::And;
  c->children = std::move(children);
  return c;
}

PathConditionPtr PathCondition::disj(std::vector<PathConditionPtr> children) {
  assert(children.size() >= 2);
  auto c = std::make_shared<PathCondition>();
  c->kind = CondKind::Or;
  c->children = std::move(children);
  return c;
}

PathConditionPtr PathCondition::negate(PathConditionPtr child) {
  auto c = std::make_shared<PathCondition>();
  c->kind = CondKind::Not;
  c->children = {std::move(child)};
  return c;
}

bool equal(const PathCondition& a, const PathCondition& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == CondKind::Leaf) return equal(a.pred, b.pred);
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // normalizes -0.0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string print_num(const NumExpr& e) {
  switch (e.kind) {
    case NumKind::Const:
      return format_double(e.value);
    case NumKind::Var:
      return e.name;
    case NumKind::Neg:
      return "(-" + print_num(*e.args[0]) + ")";
    case NumKind::Add:
      return "(" + print_num(*e.args[0]) + " + " + print_num(*e.args[1]) + ")";
    case NumKind::Sub:
      return "(" + print_num(*e.args[0]) + " - " + print_num(*e.args[1]) + ")";
    case NumKind::Mul:
      return "(" + print_num(*e.args[0]) + " * " + print_num(*e.args[1]) + ")";
    case NumKind::Div:
      return "(" + print_num(*e.args[0]) + " / " + print_num(*e.args[1]) + ")";
    case NumKind::Call: {
      std::string out(func_info(e.func).name);
      out += "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += print_num(*e.args[i]);
      }
      out += ")";
      return out;
    }
  }
  return {};
}

std::string print_condition(const PathCondition& pc) {
  switch (pc.kind) {
    case CondKind::Leaf:
      return "(" + print_num(*pc.pred.lhs) + " " +
             std::string(rel_op_text(pc.pred.op)) + " " +
             print_num(*pc.pred.rhs) + ")";
    case CondKind::Not:
      return "(!" + print_condition(*pc.children[0]) + ")";
    case CondKind::And:
    case CondKind::Or: {
      const char* sep = pc.kind == CondKind::And ? " && " : " || ";
      std::string out = "(";
      for (std::size_t i = 0; i < pc.children.size(); ++i) {
        if (i) out += sep;
        out += print_condition(*pc.children[i]);
      }
      out += ")";
      return out;
    }
  }
  return {};
}

}  // namespace pathgen
