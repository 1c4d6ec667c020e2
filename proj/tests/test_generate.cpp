#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"
#include "pathgen/generate.hpp"
#include "pathgen/oracle.hpp"
#include "pathgen/parse.hpp"
#include "test_helpers.hpp"

using namespace pathgen;

namespace {

InputBox foo_box() { return parse_domain(testutil::kFooDomain); }
PathConditionPtr foo_pc() { return parse_condition(testutil::kFooCondition); }

bool reports_equal(const GenReport& a, const GenReport& b) {
  return a.method == b.method && a.n == b.n && a.seed == b.seed &&
         a.requested == b.requested && a.accepted == b.accepted &&
         a.generated_total == b.generated_total && a.rejected == b.rejected &&
         a.search_probes == b.search_probes;
}

}  // namespace

TEST_SUITE("generate") {

TEST_CASE("rt on a tautology accepts every draw") {
  auto taut = parse_condition("x <= 16");
  GenReport rep = generate_rt(*taut, foo_box(), 100, 9);
  CHECK(rep.generated_total == 100);
  CHECK(rep.rejected == 0);
  CHECK(rep.accepted.size() == 100);
  CHECK(rep.search_probes == 0);
  CHECK(rep.n == 0);
}

TEST_CASE("every accepted point satisfies the condition, for every method") {
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 4;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenReport rt = generate_rt(*foo_pc(), foo_box(), 300, seed);
    GenReport prt = generate_prt(*foo_pc(), foo_box(), 4, 300, seed);
    GenReport art = generate_art(*foo_pc(), foo_box(), cfg, 300, seed);
    for (const GenReport* rep : {&rt, &prt, &art}) {
      REQUIRE(rep->accepted.size() == 300);
      for (const Valuation& v : rep->accepted) {
        REQUIRE(contains(foo_box(), v));
        REQUIRE(eval_condition(*foo_pc(), v));
      }
      CHECK(rep->rejected == rep->generated_total - 300);
      CHECK(rep->seed == seed);
    }
  }
}

TEST_CASE("identical seeds give identical reports") {
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 5;
  GenReport a = generate_art(*foo_pc(), foo_box(), cfg, 200, 77);
  GenReport b = generate_art(*foo_pc(), foo_box(), cfg, 200, 77);
  CHECK(reports_equal(a, b));
  GenReport c = generate_art(*foo_pc(), foo_box(), cfg, 200, 78);
  CHECK_FALSE(reports_equal(a, c));

  GenReport r1 = generate_rt(*foo_pc(), foo_box(), 200, 3);
  GenReport r2 = generate_rt(*foo_pc(), foo_box(), 200, 3);
  CHECK(reports_equal(r1, r2));
}

TEST_CASE("the acceptance cap aborts hopeless conditions") {
  try {
    (void)generate_rt(*parse_condition("x <= -1"), foo_box(), 10, 1, 10.0);
    FAIL("expected AcceptanceTooLowError");
  } catch (const AcceptanceTooLowError& e) {
    CHECK(e.generated() == 100);  // cap_factor 10 * requested 10
    CHECK(e.accepted() == 0);
  }
  CHECK_THROWS_AS(
      (void)generate_prt(*parse_condition("x >= 15 && y >= 15 && x <= 15"),
                         foo_box(), 2, 1000, 1, 2.0),
      AcceptanceTooLowError);
}

TEST_CASE("prt refutes hopeless cells; fully refuted boxes are a sound verdict") {
  CHECK_THROWS_AS((void)generate_prt(*parse_condition("x <= -1"), foo_box(), 4,
                                     10, 1),
                  UnsatProvenError);
  // One satisfiable corner point: the matching cell must survive.
  GenReport rep = generate_prt(*parse_condition("x <= 0 && y <= 0"), foo_box(), 4,
                               50, 2);
  CHECK(rep.accepted.size() == 50);
  for (const Valuation& v : rep.accepted) {
    CHECK(v.at("x") == 0.0);
    CHECK(v.at("y") == 0.0);
  }
}

TEST_CASE("prt acceptance matches the surviving-cell oracle ratio") {
  // At k=4 the refuter drops exactly the five satisfier-free cells,
  // leaving 122 satisfiers among 176 canvassed points. Expected
  // generated_total for 100 accepted is 176/122 * 100, about 144.
  double total = 0;
  int trials = 30;
  for (int t = 0; t < trials; ++t) {
    GenReport rep = generate_prt(*foo_pc(), foo_box(), 4, 100,
                                 1000 + static_cast<std::uint64_t>(t));
    total += static_cast<double>(rep.generated_total);
  }
  double mean = total / trials;
  CHECK(mean >= 130.0);
  CHECK(mean <= 160.0);
}

TEST_CASE("prt at k=1 degenerates to whole-box sampling") {
  GenReport rep = generate_prt(*foo_pc(), foo_box(), 1, 500, 5);
  CHECK(rep.n == 1);
  CHECK(rep.accepted.size() == 500);
  // Acceptance ratio matches rt's whole-box ratio (0.477) within noise.
  double ratio = static_cast<double>(rep.generated_total) / 500.0;
  CHECK(ratio > 1.8);
  CHECK(ratio < 2.4);
}

TEST_CASE("art search probes are part of the generated total") {
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 4;
  GenReport rep = generate_art(*foo_pc(), foo_box(), cfg, 400, 21);
  CHECK(rep.accepted.size() == 400);
  CHECK(rep.search_probes > 0);
  CHECK(rep.generated_total >= 400 + rep.search_probes);
  CHECK(rep.rejected == rep.generated_total - 400);
  CHECK(rep.n == 4);
}

TEST_CASE("art on a tautology spends probes only on the search phase") {
  auto taut = parse_condition("x <= 16");
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 4;
  GenReport rep = generate_art(*taut, foo_box(), cfg, 250, 13);
  CHECK(rep.generated_total == 250 + rep.search_probes);
  CHECK(rep.search_probes <= 16);  // 1 find + at most 15 expansion certs
}

TEST_CASE("art at n=1 degenerates to whole-box sampling with no search") {
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 1;
  GenReport rep = generate_art(*foo_pc(), foo_box(), cfg, 500, 5);
  CHECK(rep.n == 1);
  CHECK(rep.search_probes == 0);
  CHECK(rep.accepted.size() == 500);
  double ratio = static_cast<double>(rep.generated_total) / 500.0;
  CHECK(ratio > 1.8);
  CHECK(ratio < 2.4);
}

TEST_CASE("art reports the valid cells it sampled from") {
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 4;
  OracleReport oracle = oracle_exhaustive(*foo_pc(), foo_box(), 4);
  std::set<CellId> valid_by_oracle(oracle.valid_cells.begin(),
                                   oracle.valid_cells.end());
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenReport rep = generate_art(*foo_pc(), foo_box(), cfg, 50, seed);
    REQUIRE_FALSE(rep.valid_cells.empty());
    for (const CellId& c : rep.valid_cells) {
      CHECK(valid_by_oracle.count(c) == 1);
    }
    // Each accepted point lies in one of the reported cells.
    GridSpec grid = partition(foo_box(), 4);
    std::set<CellId> cells(rep.valid_cells.begin(), rep.valid_cells.end());
    for (const Valuation& v : rep.accepted) {
      CHECK(cells.count(locate_cell(grid, v)) == 1);
    }
  }
}

TEST_CASE("art propagates search exhaustion") {
  SearchConfig cfg;
  cfg.n0 = 2;
  cfg.n_max = 4;
  CHECK_THROWS_AS((void)generate_art(*parse_condition("x <= -1"), foo_box(), cfg,
                                     10, 1),
                  ExhaustedError);
}

TEST_CASE("the reject sink streams generation-phase rejects") {
  std::vector<Valuation> rejects;
  RejectSink sink = [&](const Valuation& v) { rejects.push_back(v); };
  GenReport rt = generate_rt(*foo_pc(), foo_box(), 200, 4, 1000.0, sink);
  CHECK(static_cast<std::int64_t>(rejects.size()) == rt.rejected);
  for (const Valuation& v : rejects) CHECK_FALSE(eval_condition(*foo_pc(), v));

  rejects.clear();
  SearchConfig cfg;
  cfg.n0 = cfg.n_max = 4;
  GenReport art = generate_art(*foo_pc(), foo_box(), cfg, 200, 4, 1000.0, sink);
  // Search probes are counted as rejects but not streamed.
  CHECK(static_cast<std::int64_t>(rejects.size()) ==
        art.rejected - art.search_probes);
}

}  // TEST_SUITE
