#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pathgen {

// ---------------------------------------------------------------------------
// Numeric expressions
// ---------------------------------------------------------------------------

enum class Func { Sin, Cos, Sqrt, Abs, Exp, Log, Pow, Min, Max };

struct FuncInfo {
  std::string_view name;
  Func id;
  int arity;
};

// Registration table for callable functions; adding a function means adding
// a row here plus its evaluation and interval cases.
const FuncInfo* func_by_name(std::string_view name);
const FuncInfo& func_info(Func f);

enum class NumKind { Const, Var, Neg, Add, Sub, Mul, Div, Call };

struct NumExpr;
using NumExprPtr = std::shared_ptr<const NumExpr>;

// Immutable after construction; nodes are shared freely across threads.
struct NumExpr {
  NumKind kind;
  double value = 0.0;             // Const
  std::string name;               // Var
  Func func = Func::Sin;          // Call
  std::vector<NumExprPtr> args;   // operands, arity checked by factories

  static NumExprPtr constant(double v);
  static NumExprPtr var(std::string name);
  static NumExprPtr neg(NumExprPtr e);
  static NumExprPtr add(NumExprPtr l, NumExprPtr r);
  static NumExprPtr sub(NumExprPtr l, NumExprPtr r);
  static NumExprPtr mul(NumExprPtr l, NumExprPtr r);
  static NumExprPtr div(NumExprPtr l, NumExprPtr r);
  static NumExprPtr call(Func f, std::vector<NumExprPtr> args);
};

bool equal(const NumExpr& a, const NumExpr& b);

// ---------------------------------------------------------------------------
// Predicates and path conditions
// ---------------------------------------------------------------------------

enum class RelOp { Le, Lt, Ge, Gt, Eq, Ne };

std::string_view rel_op_text(RelOp op);

struct Predicate {
  NumExprPtr lhs;
  RelOp op;
  NumExprPtr rhs;
};

bool equal(const Predicate& a, const Predicate& b);

enum class CondKind { Leaf, And, Or, Not };

struct PathCondition;
using PathConditionPtr = std::shared_ptr<const PathCondition>;

// Boolean tree over predicates. And/Or carry >= 2 children, Not exactly one.
struct PathCondition {
  CondKind kind;
  Predicate pred;                           // Leaf only
  std::vector<PathConditionPtr> children;   // And/Or/Not

  static PathConditionPtr leaf(Predicate p);
  static PathConditionPtr conj(std::vector<PathConditionPtr> children);
  static PathConditionPtr disj(std::vector<PathConditionPtr> children);
  static PathConditionPtr negate(PathConditionPtr child);
};

bool equal(const PathCondition& a, const PathCondition& b);

// Variable assignment; integer dimensions hold integral doubles.
using Valuation = std::map<std::string, double, std::less<>>;

// ---------------------------------------------------------------------------
// Canonical printing
// ---------------------------------------------------------------------------

// Shortest decimal string that round-trips to the same double ("0.2", "16").
// -0.0 prints as "0"; only finite values re-parse.
std::string format_double(double v);

// Fully parenthesized canonical forms; parse(print(x)) reproduces x
// structurally for any parser-producible tree.
std::string print_num(const NumExpr& e);
std::string print_condition(const PathCondition& pc);

}  // namespace pathgen
