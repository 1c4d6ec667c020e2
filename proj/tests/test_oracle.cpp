#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "pathgen/errors.hpp"
#include "pathgen/grid.hpp"
#include "pathgen/oracle.hpp"
#include "pathgen/parse.hpp"
#include "test_helpers.hpp"

using namespace pathgen;

namespace {

InputBox foo_box() { return parse_domain(testutil::kFooDomain); }
PathConditionPtr foo_pc() { return parse_condition(testutil::kFooCondition); }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("exhaustive count over the example box") {
  OracleReport rep = oracle_exhaustive(*foo_pc(), foo_box());
  CHECK(rep.exhaustive);
  CHECK(rep.total == 256);
  CHECK(rep.satisfying == 122);
  CHECK(rep.fraction == doctest::Approx(122.0 / 256.0));
}

TEST_CASE("per-cell validity map at n=4 is the frozen 11-cell map") {
  OracleReport rep = oracle_exhaustive(*foo_pc(), foo_box(), 4);
  REQUIRE(rep.n == 4);
  std::map<std::string, std::uint64_t> got;
  for (const CellId& c : rep.valid_cells) {
    got[cell_label(rep.grid, c)] = rep.cell_satisfiers[cell_index(rep.grid, c)];
  }
  std::map<std::string, std::uint64_t> want{
      {"D_2", 7},  {"D_3", 16}, {"D_4", 16}, {"D_6", 11},
      {"D_7", 16}, {"D_8", 16}, {"D_10", 1}, {"D_11", 13},
      {"D_12", 16}, {"D_15", 1}, {"D_16", 9},
  };
  CHECK(got == want);
  // Valid cells come back in canonical linear-index order.
  for (std::size_t i = 1; i < rep.valid_cells.size(); ++i) {
    CHECK(cell_index(rep.grid, rep.valid_cells[i - 1]) <
          cell_index(rep.grid, rep.valid_cells[i]));
  }
}

TEST_CASE("a tautology saturates the fraction") {
  OracleReport rep = oracle_exhaustive(*parse_condition("x <= 3"),
                                       parse_domain("x:int:0..3"), 0);
  CHECK(rep.total == 4);
  CHECK(rep.fraction == 1.0);
}

TEST_CASE("grid enlargement counts cells over the padded box but the fraction over the original") {
  OracleReport rep = oracle_exhaustive(*foo_pc(), foo_box(), 5);
  CHECK(rep.total == 256);  // original box only
  CHECK(rep.satisfying == 122);
  CHECK(rep.grid.base.dims[0].hi == 19);
  // No satisfier lives in the padding, so every valid cell's satisfier
  // count agrees with the n=4 total.
  std::uint64_t sum = 0;
  for (const CellId& c : rep.valid_cells)
    sum += rep.cell_satisfiers[cell_index(rep.grid, c)];
  CHECK(sum == 122);
}

TEST_CASE("exhaustive_point_count saturates and rejects real dims") {
  CHECK(exhaustive_point_count(foo_box()) == 256);
  CHECK(exhaustive_point_count(parse_domain("x:int:0..0")) == 1);
  CHECK_FALSE(exhaustive_point_count(parse_domain("t:real:0..1")).has_value());
  auto big = exhaustive_point_count(parse_domain(
      "a:int:0..1000000;b:int:0..1000000;c:int:0..1000000"));
  REQUIRE(big.has_value());
  CHECK(*big >= 1000000ull * 1000000ull);
}

TEST_CASE("oracle_exhaustive refuses real dims and over-limit boxes") {
  CHECK_THROWS_AS((void)oracle_exhaustive(*parse_condition("x <= 1"),
                                          parse_domain("x:real:0..1")),
                  Error);
  CHECK_THROWS_AS((void)oracle_exhaustive(*parse_condition("x <= 1"),
                                          parse_domain("x:int:0..200"), 0, 100),
                  Error);
}

TEST_CASE("montecarlo mode estimates the fraction with a Wilson interval") {
  OracleReport rep = oracle_montecarlo(*foo_pc(), foo_box(), 100000, 5);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.total == 100000);
  CHECK(rep.fraction > 0.46);
  CHECK(rep.fraction < 0.50);
  CHECK(rep.wilson_lo < rep.fraction);
  CHECK(rep.wilson_hi > rep.fraction);
  CHECK(rep.wilson_hi - rep.wilson_lo < 0.01);

  OracleReport again = oracle_montecarlo(*foo_pc(), foo_box(), 100000, 5);
  CHECK(again.satisfying == rep.satisfying);

  OracleReport real_dom = oracle_montecarlo(
      *parse_condition("x <= 0.5"), parse_domain("x:real:0..1"), 50000, 7);
  CHECK(real_dom.fraction == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("montecarlo cell map finds every well-sampled valid cell") {
  OracleReport mc = oracle_montecarlo(*foo_pc(), foo_box(), 100000, 11, 4);
  OracleReport ex = oracle_exhaustive(*foo_pc(), foo_box(), 4);
  REQUIRE(mc.n == 4);
  std::set<CellId> exact(ex.valid_cells.begin(), ex.valid_cells.end());
  for (const CellId& c : mc.valid_cells) CHECK(exact.count(c) == 1);
  // 100k samples hit every satisfier with near certainty.
  CHECK(mc.valid_cells.size() == exact.size());
}

}  // TEST_SUITE
