#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pathgen/expr.hpp"
#include "pathgen/grid.hpp"
#include "pathgen/rng.hpp"

namespace pathgen {

enum class CellState { Candidate, Excluded, Valid, Invalid };

struct SearchConfig {
  int n0 = 1;                            // initial grid resolution
  int n_max = 64;                        // finest resolution tried
  int samples_per_cell = 8;              // band probes per (neighbor, valid) pair
  double beta = 0.25;                    // boundary band fraction, in (0, 1]
  std::int64_t probe_budget = 1'000'000; // cap on concrete condition evaluations
  bool band_retest = true;               // re-probe an Invalid cell from each new valid neighbor
};

// Per-resolution candidate bookkeeping with O(1) random pick and removal.
// Exposed so the exclusion geometry is testable step by step.
struct CellStateMap {
  GridSpec grid;
  std::vector<CellState> states;        // by linear cell index
  std::vector<std::uint64_t> pool;      // candidate cell indices, unordered
  std::vector<std::int64_t> slot;       // cell index -> position in pool, -1 if gone

  bool any_candidates() const { return !pool.empty(); }
  CellId pick_candidate(RandomStream& rng) const;
};

CellStateMap make_state_map(const GridSpec& grid);

// Marks the cell and its Moore neighbors Excluded (Candidates only) and
// drops them from the pool.
void exclude_with_neighbors(CellStateMap& m, const CellId& c);

// Remaining candidates in canonical (linear index) order.
std::vector<CellId> candidate_cells(const CellStateMap& m);

struct FirstValid {
  GridSpec grid;
  CellId cell;
  Valuation witness;          // satisfies the condition, inside the cell
  std::int64_t probes = 0;    // condition evaluations spent, success included
};

// Coarse-to-fine scan: for each resolution n0..n_max, partition afresh and
// repeatedly (pick a candidate cell uniformly, draw one point uniformly in
// it, evaluate): a hit returns, a miss excludes the cell and its Moore
// neighbors. A resolution whose candidates run out advances to the next
// with no carried-over state. Throws ExhaustedError when resolutions or
// the probe budget run out, and when refinement past n0 becomes impossible
// because an int dimension is too small to split further.
FirstValid find_first_valid(const PathCondition& pc, const InputBox& box,
                            const SearchConfig& cfg, RandomStream& rng);

struct ValidRegion {
  GridSpec grid;
  std::vector<CellId> valid;               // canonical order
  std::map<CellId, Valuation> witnesses;   // each satisfies the condition
  std::int64_t probes = 0;                 // total, search phase included
  bool truncated = false;                  // probe budget hit mid-expansion
};

// Breadth-first growth from the seed cell: each dequeued valid cell probes
// every non-valid Moore neighbor with up to samples_per_cell points drawn
// from the boundary band facing the valid cell. A hit marks the neighbor
// valid (with witness) and enqueues it; otherwise the neighbor is marked
// Invalid, but may be re-probed later from a different valid neighbor
// (band_retest) since that band covers different ground. probes starts
// from probes_already_used so the budget spans search plus expansion; on
// exhaustion the region found so far is returned with truncated set.
ValidRegion expand_valid(const PathCondition& pc, const GridSpec& grid,
                         const CellId& seed_cell, const Valuation& seed_witness,
                         const SearchConfig& cfg, RandomStream& rng,
                         std::int64_t probes_already_used = 0);

}  // namespace pathgen
