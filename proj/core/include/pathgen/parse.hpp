#pragma once

#include <string_view>

#include "pathgen/errors.hpp"
#include "pathgen/expr.hpp"

namespace pathgen {

// Parses the boolean condition DSL:
//
//   condition  = or ;
//   or         = and { "||" and } ;
//   and        = not { "&&" not } ;
//   not        = "!" not | "(" condition ")" | comparison ;
//   comparison = arith relop arith ;
//   relop      = "<=" | "<" | ">=" | ">" | "==" | "!=" ;
//   arith      = term { ("+" | "-") term } ;
//   term       = unary { ("*" | "/") unary } ;
//   unary      = "-" unary | atom ;
//   atom       = number | ident | ident "(" arith { "," arith } ")"
//              | "(" arith ")" ;
//
// "&&" binds tighter than "||", "!" tighter than both; chains of "&&"/"||"
// flatten into single n-ary And/Or nodes. After "(" the parser first attempts
// a condition and falls back to a comparison when the parenthesized content
// turns out to be a bare arithmetic expression (the only backtracking point).
//
// Throws ParseError with 1-based line/column on malformed input.
PathConditionPtr parse_condition(std::string_view text);

}  // namespace pathgen
