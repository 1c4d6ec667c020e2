#include <string>
#include <vector>

#include "doctest.h"
#include "pathgen/errors.hpp"
#include "pathgen/expr.hpp"
#include "pathgen/parse.hpp"
#include "pathgen/rng.hpp"
#include "test_helpers.hpp"

using namespace pathgen;

TEST_SUITE("parse") {

TEST_CASE("the bundled example condition parses to the expected tree") {
  auto pc = parse_condition(testutil::kFooCondition);
  REQUIRE(pc->kind == CondKind::And);
  REQUIRE(pc->children.size() == 3);
  for (const auto& child : pc->children) CHECK(child->kind == CondKind::Leaf);
  CHECK(pc->children[0]->pred.op == RelOp::Le);
  // 8*sin(0.2*x+7)+4 is (8*sin(...)) + 4: '*' binds tighter than '+'.
  const NumExpr& rhs = *pc->children[0]->pred.rhs;
  REQUIRE(rhs.kind == NumKind::Add);
  CHECK(rhs.args[0]->kind == NumKind::Mul);
  CHECK(rhs.args[1]->value == doctest::Approx(4));
}

TEST_CASE("operator precedence: ! over && over ||") {
  auto pc = parse_condition("x <= 1 || x <= 2 && x <= 3");
  REQUIRE(pc->kind == CondKind::Or);
  REQUIRE(pc->children.size() == 2);
  CHECK(pc->children[0]->kind == CondKind::Leaf);
  CHECK(pc->children[1]->kind == CondKind::And);

  auto neg = parse_condition("!x <= 1 && x <= 2");
  REQUIRE(neg->kind == CondKind::And);
  CHECK(neg->children[0]->kind == CondKind::Not);
}

TEST_CASE("arithmetic precedence: unary minus, then * /, then + -") {
  auto pc = parse_condition("-2*x + 1 <= y");
  const NumExpr& lhs = *pc->pred.lhs;
  REQUIRE(lhs.kind == NumKind::Add);
  REQUIRE(lhs.args[0]->kind == NumKind::Mul);
  CHECK(lhs.args[0]->args[0]->kind == NumKind::Neg);

  auto chain = parse_condition("x - 1 - 2 <= 0");
  // Left associative: (x - 1) - 2.
  REQUIRE(chain->pred.lhs->kind == NumKind::Sub);
  CHECK(chain->pred.lhs->args[0]->kind == NumKind::Sub);
}

TEST_CASE("&& and || flatten to n-ary nodes") {
  auto pc = parse_condition("x <= 1 && x <= 2 && x <= 3 && x <= 4");
  REQUIRE(pc->kind == CondKind::And);
  CHECK(pc->children.size() == 4);

  auto po = parse_condition("x <= 1 || x <= 2 || x <= 3");
  REQUIRE(po->kind == CondKind::Or);
  CHECK(po->children.size() == 3);

  // Parenthesized groups stay nested.
  auto nested = parse_condition("(x <= 1 && x <= 2) && x <= 3");
  REQUIRE(nested->kind == CondKind::And);
  REQUIRE(nested->children.size() == 2);
  CHECK(nested->children[0]->kind == CondKind::And);
}

TEST_CASE("parenthesis disambiguation between conditions and arithmetic") {
  CHECK(parse_condition("(x <= 1) && y <= 2")->kind == CondKind::And);
  CHECK(parse_condition("(x + 1) <= 2")->kind == CondKind::Leaf);
  CHECK(parse_condition("((x) + (y)) <= ((1))")->kind == CondKind::Leaf);
  CHECK(parse_condition("((x <= 1))")->kind == CondKind::Leaf);
  auto mixed = parse_condition("(x + 1 <= y) || (y / 2 >= x)");
  CHECK(mixed->kind == CondKind::Or);
}

TEST_CASE("function calls and arity checking") {
  auto pc = parse_condition("pow(x, 2) + min(x, y) <= max(x, 0.5)");
  CHECK(pc->kind == CondKind::Leaf);
  CHECK_THROWS_AS((void)parse_condition("frob(x) <= 1"), ParseError);
  CHECK_THROWS_AS((void)parse_condition("sin(x, y) <= 1"), ParseError);
  CHECK_THROWS_AS((void)parse_condition("min(x) <= 1"), ParseError);
  CHECK_THROWS_AS((void)parse_condition("sin() <= 1"), ParseError);
}

TEST_CASE("number literal forms") {
  CHECK(parse_condition("x <= 1e3")->pred.rhs->value == doctest::Approx(1000));
  CHECK(parse_condition("x <= 2.5e-2")->pred.rhs->value == doctest::Approx(0.025));
  CHECK(parse_condition("x <= 1E+2")->pred.rhs->value == doctest::Approx(100));
  CHECK_THROWS_AS((void)parse_condition("x <= 1."), ParseError);
  CHECK_THROWS_AS((void)parse_condition("x <= .5"), ParseError);
  CHECK_THROWS_AS((void)parse_condition("x <= 1e"), ParseError);
  CHECK_THROWS_AS((void)parse_condition("x <= 1e999"), ParseError);
}

TEST_CASE("errors carry 1-based line and column") {
  try {
    (void)parse_condition("x <=\n@ 1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 1);
  }
  try {
    (void)parse_condition("x <= 1 &&");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() >= 9);
  }
}

TEST_CASE("malformed fixtures raise ParseError, never crash") {
  const char* fixtures[] = {
      "",
      "   ",
      "x",
      "x <=",
      "<= 1",
      "x <= 1 &&",
      "x <= 1 || || x <= 2",
      "x = 1",
      "x & y",
      "x | y",
      "x == == 1",
      "x <= y <= z",
      "x <= (1",
      "x <= 1)",
      "(x <= 1",
      "()",
      "(())",
      "x <= 1 extra",
      "x + <= 1",
      "x <= 1..2",
      "1. <= x",
      "x <= @",
      "x <= 1 &&& x <= 2",
      "!(x <= 1",
      "!",
      "pow(x 2) <= 1",
      "min(x, ) <= 1",
      "x\n<=\n&&",
  };
  for (const char* text : fixtures) {
    CAPTURE(text);
    try {
      (void)parse_condition(text);
      FAIL_CHECK("no ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.col() >= 1);
    }
  }
}

TEST_CASE("deeply nested input hits the depth cap instead of overflowing") {
  std::string text(600, '(');
  text += "x";
  text += std::string(600, ')');
  text += " <= 1";
  CHECK_THROWS_AS((void)parse_condition(text), ParseError);
}

TEST_CASE("print then parse is a structural identity on random conditions") {
  RandomStream rng(20240817);
  for (int i = 0; i < 10000; ++i) {
    auto ast = testutil::random_condition(rng, 4);
    auto back = parse_condition(print_condition(*ast));
    if (!equal(*ast, *back)) {
      CAPTURE(print_condition(*ast));
      REQUIRE(equal(*ast, *back));
    }
  }
}

TEST_CASE("parse then print is stable on the example condition") {
  auto pc = parse_condition(testutil::kFooCondition);
  auto again = parse_condition(print_condition(*pc));
  CHECK(equal(*pc, *again));
}

}  // TEST_SUITE
