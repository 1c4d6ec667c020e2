#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathgen/domain.hpp"
#include "pathgen/expr.hpp"
#include "pathgen/grid.hpp"

namespace pathgen {

// Ground truth by brute force: how much of the box satisfies the condition,
// and which grid cells contain at least one satisfying point.
struct OracleReport {
  std::uint64_t total = 0;       // box points enumerated, or samples drawn
  std::uint64_t satisfying = 0;
  double fraction = 0.0;
  bool exhaustive = true;
  std::uint64_t seed = 0;        // montecarlo only
  double wilson_lo = 0.0;        // 95% interval on the fraction, montecarlo only
  double wilson_hi = 0.0;

  // Present when a grid resolution was requested (n > 0). Counts cover the
  // whole (possibly enlarged) grid; total/satisfying/fraction cover only
  // the original box.
  int n = 0;
  GridSpec grid;
  std::vector<std::uint64_t> cell_satisfiers;  // by linear cell index
  std::vector<CellId> valid_cells;             // >= 1 satisfier, canonical order
};

// Number of integer points the box holds (saturating), or nullopt when a
// real dimension makes enumeration impossible.
std::optional<std::uint64_t> exhaustive_point_count(const InputBox& box);

// Enumerates every integer point; with n > 0 also classifies the cells of
// partition(box, n), scanning the enlarged base box so extension cells are
// classified too. Throws Error when the box has real dimensions or more
// than point_limit points.
OracleReport oracle_exhaustive(const PathCondition& pc, const InputBox& box,
                               int n = 0,
                               std::uint64_t point_limit = 100'000'000);

// Uniform sampling fallback for real or huge boxes; cell classification is
// then a sampled lower bound (a cell with no hit may still be valid).
OracleReport oracle_montecarlo(const PathCondition& pc, const InputBox& box,
                               std::uint64_t samples, std::uint64_t seed,
                               int n = 0);

}  // namespace pathgen
