#include <cmath>
#include <string>

#include "doctest.h"
#include "pathgen/domain.hpp"
#include "pathgen/errors.hpp"
#include "pathgen/rng.hpp"
#include "test_helpers.hpp"

using namespace pathgen;

TEST_SUITE("domain") {

TEST_CASE("the example domain parses to two int dimensions") {
  InputBox box = parse_domain(testutil::kFooDomain);
  REQUIRE(box.dims.size() == 2);
  CHECK(box.dims[0].name == "x");
  CHECK(box.dims[0].kind == VarKind::Int);
  CHECK(box.dims[0].lo == 0);
  CHECK(box.dims[0].hi == 15);
  CHECK(box.dims[1].name == "y");
  CHECK(box.dim_count() == 2);
  REQUIRE(box.find("y") != nullptr);
  CHECK(box.find("y")->hi == 15);
  CHECK(box.find("z") == nullptr);
}

TEST_CASE("real bounds, negatives and exponents") {
  InputBox box = parse_domain("t:real:-1.5..2.5;u:real:1e-3..2e3");
  CHECK(box.dims[0].kind == VarKind::Real);
  CHECK(box.dims[0].lo == -1.5);
  CHECK(box.dims[0].hi == 2.5);
  CHECK(box.dims[1].lo == 1e-3);
  CHECK(box.dims[1].hi == 2e3);

  InputBox neg = parse_domain("x:int:-10..-2");
  CHECK(neg.dims[0].lo == -10);
  CHECK(neg.dims[0].hi == -2);
}

TEST_CASE("format_domain round-trips") {
  for (const char* text : {testutil::kFooDomain, "t:real:-1.5..2.5",
                           "a:int:-3..3;b:real:0..1;c:int:0..0"}) {
    InputBox box = parse_domain(text);
    InputBox again = parse_domain(format_domain(box));
    REQUIRE(again.dims.size() == box.dims.size());
    for (std::size_t i = 0; i < box.dims.size(); ++i) {
      CHECK(again.dims[i].name == box.dims[i].name);
      CHECK(again.dims[i].kind == box.dims[i].kind);
      CHECK(again.dims[i].lo == box.dims[i].lo);
      CHECK(again.dims[i].hi == box.dims[i].hi);
    }
  }
}

TEST_CASE("malformed domains raise ParseError with positions") {
  try {
    (void)parse_domain("x:int:5..0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("lo exceeds hi") != std::string::npos);
    CHECK(e.line() == 1);
  }
  const char* fixtures[] = {
      "",
      "x",
      "x:",
      "x:int",
      "x:int:",
      "x:int:0",
      "x:int:0..",
      "x:int:..5",
      "x:float:0..1",
      "x:int:0..15;x:int:0..3",
      "x:int:0.5..3",
      "x:int:0..3.25",
      "x:int:0..1e300",
      "x:real:0..inf",
      "1x:int:0..3",
      "x:int:0..3;;y:int:0..3",
      "x:int:0...3",
  };
  for (const char* text : fixtures) {
    CAPTURE(text);
    CHECK_THROWS_AS((void)parse_domain(text), ParseError);
  }
}

TEST_CASE("int bounds must be exact integers within the double-exact range") {
  // 2^53 + 2 is representable and over the limit; 2^53 itself is the limit.
  CHECK_THROWS_AS((void)parse_domain("x:int:0..9007199254740994"), ParseError);
  InputBox ok = parse_domain("x:int:0..9007199254740992");
  CHECK(ok.dims[0].hi == 9007199254740992.0);
}

TEST_CASE("sampling lands inside the box with the right integrality") {
  InputBox box = parse_domain("x:int:-5..5;t:real:0..1");
  RandomStream rng(99);
  for (int i = 0; i < 2000; ++i) {
    Valuation v = sample_uniform(box, rng);
    REQUIRE(contains(box, v));
    double x = v.at("x");
    CHECK(x == std::floor(x));
    CHECK(v.at("t") >= 0.0);
    CHECK(v.at("t") < 1.0);
  }
}

TEST_CASE("sampling is deterministic per seed and draws in dim order") {
  InputBox box = parse_domain(testutil::kFooDomain);
  RandomStream a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    Valuation va = sample_uniform(box, a);
    Valuation vb = sample_uniform(box, b);
    CHECK(va == vb);
  }
  // First draw feeds the first dimension: a single-dim box consumes
  // exactly the stream's next_int.
  InputBox one = parse_domain("x:int:0..15");
  RandomStream s1(123), s2(123);
  Valuation v = sample_uniform(one, s1);
  CHECK(v.at("x") == static_cast<double>(s2.next_int(0, 15)));
}

TEST_CASE("degenerate single-point dimensions sample that point") {
  InputBox box = parse_domain("x:int:3..3;t:real:0.5..0.5");
  RandomStream rng(1);
  Valuation v = sample_uniform(box, rng);
  CHECK(v.at("x") == 3.0);
  CHECK(v.at("t") == 0.5);
}

TEST_CASE("contains enforces integrality and bounds") {
  InputBox box = parse_domain(testutil::kFooDomain);
  CHECK(contains(box, {{"x", 0.0}, {"y", 15.0}}));
  CHECK_FALSE(contains(box, {{"x", 0.5}, {"y", 1.0}}));
  CHECK_FALSE(contains(box, {{"x", -1.0}, {"y", 1.0}}));
  CHECK_FALSE(contains(box, {{"x", 16.0}, {"y", 1.0}}));
}

}  // TEST_SUITE
