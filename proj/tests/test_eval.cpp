#include <cmath>
#include <limits>

#include "doctest.h"
#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"
#include "pathgen/parse.hpp"
#include "test_helpers.hpp"

using namespace pathgen;

namespace {

bool holds(const char* text, Valuation v) {
  return eval_condition(*parse_condition(text), v);
}

std::optional<double> num(const char* text, Valuation v) {
  return eval_num(*parse_condition(std::string(text) + " <= 0")->pred.lhs, v);
}

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("plain arithmetic and relations") {
  Valuation v{{"x", 3.0}, {"y", -2.0}};
  CHECK(num("x + y", v) == 1.0);
  CHECK(num("x * y", v) == -6.0);
  CHECK(num("x - 2 * y", v) == 7.0);
  CHECK(num("-x", v) == -3.0);
  CHECK(holds("x > y", v));
  CHECK(holds("y < x", v));
  CHECK(holds("x >= 3", v));
  CHECK(holds("x <= 3", v));
  CHECK_FALSE(holds("x < 3", v));
  CHECK(holds("x == 3", v));
  CHECK(holds("x != 2.5", v));
}

TEST_CASE("equality is exact, not tolerant") {
  CHECK(holds("x == 0.1", {{"x", 0.1}}));
  CHECK_FALSE(holds("x == 0.1", {{"x", 0.1 + 1e-17}}));
  CHECK_FALSE(holds("0.1 + 0.2 == 0.3", {{"x", 0.0}}));
}

TEST_CASE("partial functions go undefined outside their domain") {
  Valuation v{{"x", -1.0}};
  CHECK(num("sqrt(x)", v) == std::nullopt);
  CHECK(num("log(x)", v) == std::nullopt);
  CHECK(num("log(0)", v) == std::nullopt);
  CHECK(num("1 / (x + 1)", v) == std::nullopt);
  CHECK(num("sqrt(x + 1)", v) == 0.0);
}

TEST_CASE("a predicate with an undefined side is false; negation flips it") {
  Valuation v{{"x", -1.0}};
  CHECK_FALSE(holds("sqrt(x) <= 10", v));
  CHECK_FALSE(holds("sqrt(x) > 10", v));
  CHECK_FALSE(holds("sqrt(x) == sqrt(x)", v));
  CHECK_FALSE(holds("sqrt(x) != sqrt(x)", v));
  CHECK(holds("!(sqrt(x) <= 10)", v));
  CHECK_FALSE(holds("1 / x <= 1", {{"x", 0.0}}));
}

TEST_CASE("power splits on syntactic integer exponents") {
  CHECK(num("pow(x, 2)", {{"x", -3.0}}) == 9.0);
  CHECK(num("pow(x, 3)", {{"x", -2.0}}) == -8.0);
  CHECK(num("pow(x, -2)", {{"x", 2.0}}) == 0.25);
  CHECK(num("pow(x, -1)", {{"x", 0.0}}) == std::nullopt);
  CHECK(num("pow(0, 0)", {{"x", 0.0}}) == 1.0);
  // Non-integer exponent means exp(y*log(x)): nonpositive base is undefined.
  CHECK(num("pow(x, 0.5)", {{"x", -3.0}}) == std::nullopt);
  CHECK(num("pow(x, 0.5)", {{"x", 0.0}}) == std::nullopt);
  CHECK(num("pow(x, 0.5)", {{"x", 4.0}}) == doctest::Approx(2.0));
  CHECK(num("pow(2, x)", {{"x", 0.5}}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("integer_constant_exponent recognizes Const and Neg(Const) integers") {
  auto get = [](const char* t) {
    auto pc = parse_condition(std::string("pow(x, ") + t + ") <= 0");
    return integer_constant_exponent(*pc->pred.lhs->args[1]);
  };
  CHECK(get("2") == 2.0);
  CHECK(get("-3") == -3.0);
  CHECK(get("0") == 0.0);
  CHECK(get("2.5") == std::nullopt);
  CHECK(get("x") == std::nullopt);
  CHECK(get("1 + 1") == std::nullopt);
}

TEST_CASE("min max abs exp") {
  Valuation v{{"x", -1.5}, {"y", 2.0}};
  CHECK(num("min(x, y)", v) == -1.5);
  CHECK(num("max(x, y)", v) == 2.0);
  CHECK(num("abs(x)", v) == 1.5);
  CHECK(num("exp(0)", v) == 1.0);
}

TEST_CASE("infinities are ordinary values") {
  double inf = std::numeric_limits<double>::infinity();
  CHECK(holds("x >= 1e300", {{"x", inf}}));
  CHECK(holds("x <= 0", {{"x", -inf}}));
  CHECK(num("exp(x)", {{"x", 1000.0}}) == inf);
  // inf - inf is NaN, hence undefined.
  CHECK(num("x - x", {{"x", inf}}) == std::nullopt);
  CHECK_FALSE(holds("x - x == 0", {{"x", inf}}));
}

TEST_CASE("unbound variables throw with the name, without short-circuiting") {
  Valuation only_x{{"x", 5.0}};
  try {
    (void)holds("y <= 1", only_x);
    FAIL("expected UnboundVariableError");
  } catch (const UnboundVariableError& e) {
    CHECK(e.name() == "y");
  }
  // Both conjuncts are evaluated even though the first already settles
  // the outcome, so the unbound right side is always detected.
  CHECK_THROWS_AS((void)holds("x <= 1 && y <= 1", only_x), UnboundVariableError);
  CHECK_THROWS_AS((void)holds("x >= 1 || y <= 1", only_x), UnboundVariableError);
}

TEST_CASE("the example condition matches hand-checked points") {
  auto pc = parse_condition(testutil::kFooCondition);
  auto at = [&](double x, double y) {
    return eval_condition(*pc, Valuation{{"x", x}, {"y", y}});
  };
  CHECK(at(0, 0));
  CHECK(at(8, 8));    // the lone satisfier of the third-column center cell
  CHECK(at(12, 4));
  CHECK_FALSE(at(8, 9));
  CHECK_FALSE(at(0, 12));
  CHECK_FALSE(at(15, 15));

  int count = 0;
  for (int x = 0; x <= 15; ++x)
    for (int y = 0; y <= 15; ++y)
      if (at(x, y)) ++count;
  CHECK(count == 122);
}

}  // TEST_SUITE
