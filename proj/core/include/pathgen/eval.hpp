#pragma once

#include <optional>

#include "pathgen/expr.hpp"

namespace pathgen {

// Concrete evaluation over doubles with strict undefinedness. A value is
// undefined (nullopt) when it is NaN, a division by exact zero, sqrt of a
// negative, log of a non-positive, or pow outside its domain, and
// undefinedness propagates through every enclosing arithmetic node.
// Infinities are ordinary values; they only become undefined where IEEE
// arithmetic turns them into NaN (inf - inf, 0 * inf, ...).
//
// A comparison with an undefined side evaluates to false, so its negation
// evaluates to true. And/Or evaluate every child (no short-circuit) so an
// UnboundVariableError never depends on sibling outcomes.
std::optional<double> eval_num(const NumExpr& e, const Valuation& vals);
bool eval_predicate(const Predicate& p, const Valuation& vals);
bool eval_condition(const PathCondition& pc, const Valuation& vals);

// Exponent shape that selects algebraic power semantics: a literal constant,
// or a negated literal constant, whose value is integral. Returns that value.
// pow with such an exponent permits negative bases (0^0 == 1; 0^k undefined
// for k < 0). Any other exponent uses exp(y*log(x)) semantics, defined only
// for base > 0. Interval evaluation applies the same split.
std::optional<double> integer_constant_exponent(const NumExpr& exponent);

}  // namespace pathgen
