#include "pathgen/eval.hpp"

#include <cmath>

#include "pathgen/errors.hpp"

namespace pathgen {

namespace {

std::optional<double> norm(double v) {
  if (std::isnan(v)) return std::nullopt;
  return v;
}

std::optional<double> eval_call(const NumExpr& e, const Valuation& vals) {
  auto a = eval_num(*e.args[0], vals);
  if (!a) return std::nullopt;
  switch (e.func) {
    case Func::Sin: return norm(std::sin(*a));
    case Func::Cos: return norm(std::cos(*a));
    case Func::Sqrt:
      if (*a < 0.0) return std::nullopt;
      return norm(std::sqrt(*a));
    case Func::Abs: return std::fabs(*a);
    case Func::Exp: return norm(std::exp(*a));
    case Func::Log:
      if (*a <= 0.0) return std::nullopt;
      return norm(std::log(*a));
    case Func::Pow: {
      auto b = eval_num(*e.args[1], vals);
      if (!b) return std::nullopt;
      if (auto k = integer_constant_exponent(*e.args[1])) {
        if (*a == 0.0 && *k < 0.0) return std::nullopt;
        return norm(std::pow(*a, *k));
      }
      if (*a <= 0.0) return std::nullopt;
      return norm(std::pow(*a, *b));
    }
    case Func::Min: {
      auto b = eval_num(*e.args[1], vals);
      if (!b) return std::nullopt;
      return std::fmin(*a, *b);
    }
    case Func::Max: {
      auto b = eval_num(*e.args[1], vals);
      if (!b) return std::nullopt;
      return std::fmax(*a, *b);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> integer_constant_exponent(const NumExpr& e) {
  double v;
  if (e.kind == NumKind::Const) {
    v = e.value;
  } else if (e.kind == NumKind::Neg && e.args[0]->kind == NumKind::Const) {
    v = -e.args[0]->value;
  } else {
    return std::nullopt;
  }
  if (std::isfinite(v) && std::nearbyint(v) == v) return v;
  return std::nullopt;
}

std::optional<double> eval_num(const NumExpr& e, const Valuation& vals) {
  switch (e.kind) {
    case NumKind::Const:
      return norm(e.value);
    case NumKind::Var: {
      auto it = vals.find(e.name);
      if (it == vals.end()) throw UnboundVariableError(e.name);
      return norm(it->second);
    }
    case NumKind::Neg: {
      auto a = eval_num(*e.args[0], vals);
      if (!a) return std::nullopt;
      return -*a;
    }
    case NumKind::Add: {
      auto a = eval_num(*e.args[0], vals);
      auto b = eval_num(*e.args[1], vals);
      if (!a || !b) return std::nullopt;
      return norm(*a + *b);
    }
    case NumKind::Sub: {
      auto a = eval_num(*e.args[0], vals);
      auto b = eval_num(*e.args[1], vals);
      if (!a || !b) return std::nullopt;
      return norm(*a - *b);
    }
    case NumKind::Mul: {
      auto a = eval_num(*e.args[0], vals);
      auto b = eval_num(*e.args[1], vals);
      if (!a || !b) return std::nullopt;
      return norm(*a * *b);
    }
    case NumKind::Div: {
      auto a = eval_num(*e.args[0], vals);
      auto b = eval_num(*e.args[1], vals);
      if (!a || !b) return std::nullopt;
      if (*b == 0.0) return std::nullopt;
      return norm(*a / *b);
    }
    case NumKind::Call:
      return eval_call(e, vals);
  }
  return std::nullopt;
}

bool eval_predicate(const Predicate& p, const Valuation& vals) {
  auto l = eval_num(*p.lhs, vals);
  auto r = eval_num(*p.rhs, vals);
  if (!l || !r) return false;
  switch (p.op) {
    case RelOp::Le: return *l <= *r;
    case RelOp::Lt: return *l < *r;
    case RelOp::Ge: return *l >= *r;
    case RelOp::Gt: return *l > *r;
    case RelOp::Eq: return *l == *r;
    case RelOp::Ne: return *l != *r;
  }
  return false;
}

bool eval_condition(const PathCondition& pc, const Valuation& vals) {
  switch (pc.kind) {
    case CondKind::Leaf:
      return eval_predicate(pc.pred, vals);
    case CondKind::Not:
      return !eval_condition(*pc.children[0], vals);
    case CondKind::And: {
      bool all = true;
      for (const auto& c : pc.children) {
        if (!eval_condition(*c, vals)) all = false;
      }
      return all;
    }
    case CondKind::Or: {
      bool any = false;
      for (const auto& c : pc.children) {
        if (eval_condition(*c, vals)) any = true;
      }
      return any;
    }
  }
  return false;
}

}  // namespace pathgen
