#pragma once

#include "pathgen/domain.hpp"
#include "pathgen/expr.hpp"

namespace pathgen {

// Closed interval over the extended reals with a distinguished Empty value
// and an undefinedness flag.
//
// Contract relative to concrete evaluation over a box B:
//   - every point p in B where eval_num is defined has its value in [lo, hi];
//   - maybe_undefined is true whenever some point of B can make the
//     expression undefined;
//   - Empty means no point of B yields a defined value (so maybe_undefined
//     is always true for Empty);
//   - on a single-point box the result equals the concrete evaluation
//     exactly (or is Empty iff the point is undefined).
//
// Endpoint arithmetic for + - * / needs no outward rounding: IEEE rounding
// is monotone, so corner evaluation bounds every interior rounded result.
// Endpoints of sin/cos/exp/log/pow go through libm, which may be off by an
// ulp, so those are widened outward by two ulps on non-degenerate inputs
// (degenerate inputs reproduce the concrete call bit for bit). sqrt is
// correctly rounded by IEEE and stays exact.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool maybe_undefined = false;
  bool empty = false;

  static Interval make(double lo, double hi, bool maybe_undefined = false);
  static Interval empty_set();
  static Interval whole(bool maybe_undefined);

  bool degenerate() const { return !empty && lo == hi; }
};

// Natural interval extension of e over the box (int dims are relaxed to
// their real ranges, which is sound for every contained integer point).
// Throws UnboundVariableError for variables missing from the box.
Interval iv_eval(const NumExpr& e, const InputBox& box);

// Refutation-only verdicts: Unsat is a proof that no point of the box has
// both sides defined and the relation true; Unknown promises nothing.
enum class Refutation { Unsat, Unknown };

Refutation refute_predicate(const Predicate& p, const InputBox& box);

// Lifted over the boolean structure: And is Unsat if any child is, Or only
// if all children are, Not never refutes (refutation is one-sided).
Refutation refute_pc(const PathCondition& pc, const InputBox& box);

}  // namespace pathgen
