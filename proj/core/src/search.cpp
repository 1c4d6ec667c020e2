#include "pathgen/search.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"

namespace pathgen {

CellId CellStateMap::pick_candidate(RandomStream& rng) const {
  assert(!pool.empty());
  return cell_at(grid, pool[rng.next_index(pool.size())]);
}

CellStateMap make_state_map(const GridSpec& grid) {
  CellStateMap m;
  m.grid = grid;
  const std::uint64_t total = grid.cell_count();
  m.states.assign(total, CellState::Candidate);
  m.pool.resize(total);
  m.slot.resize(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    m.pool[i] = i;
    m.slot[i] = static_cast<std::int64_t>(i);
  }
  return m;
}

namespace {

void drop_candidate(CellStateMap& m, std::uint64_t idx) {
  if (m.states[idx] != CellState::Candidate) return;
  m.states[idx] = CellState::Excluded;
  std::int64_t pos = m.slot[idx];
  std::uint64_t moved = m.pool.back();
  m.pool[static_cast<std::size_t>(pos)] = moved;
  m.slot[moved] = pos;
  m.pool.pop_back();
  m.slot[idx] = -1;
}

}  // namespace

void exclude_with_neighbors(CellStateMap& m, const CellId& c) {
  drop_candidate(m, cell_index(m.grid, c));
  for (const CellId& nb : neighbors_moore(m.grid, c)) {
    drop_candidate(m, cell_index(m.grid, nb));
  }
}

std::vector<CellId> candidate_cells(const CellStateMap& m) {
  std::vector<std::uint64_t> idx(m.pool);
  std::sort(idx.begin(), idx.end());
  std::vector<CellId> out;
  out.reserve(idx.size());
  for (std::uint64_t i : idx) out.push_back(cell_at(m.grid, i));
  return out;
}

FirstValid find_first_valid(const PathCondition& pc, const InputBox& box,
                            const SearchConfig& cfg, RandomStream& rng) {
  assert(cfg.n0 >= 1 && cfg.n0 <= cfg.n_max);
  std::int64_t probes = 0;
  int last_n = cfg.n0;
  for (int n = cfg.n0; n <= cfg.n_max; ++n) {
    GridSpec grid;
    try {
      grid = partition(box, n);
    } catch (const DegenerateDomainError&) {
      // The initial resolution must be buildable; a later one that is not
      // just means no finer grid exists.
      if (n == cfg.n0) throw;
      throw ExhaustedError(static_cast<std::uint64_t>(probes), last_n);
    }
    last_n = n;
    CellStateMap m = make_state_map(grid);
    while (m.any_candidates()) {
      CellId cell = m.pick_candidate(rng);
      Valuation pt = sample_uniform(cell_box(grid, cell), rng);
      if (probes >= cfg.probe_budget) {
        throw ExhaustedError(static_cast<std::uint64_t>(probes), n);
      }
      ++probes;
      if (eval_condition(pc, pt)) {
        return FirstValid{std::move(grid), std::move(cell), std::move(pt), probes};
      }
      exclude_with_neighbors(m, cell);
    }
  }
  throw ExhaustedError(static_cast<std::uint64_t>(probes), cfg.n_max);
}

ValidRegion expand_valid(const PathCondition& pc, const GridSpec& grid,
                         const CellId& seed_cell, const Valuation& seed_witness,
                         const SearchConfig& cfg, RandomStream& rng,
                         std::int64_t probes_already_used) {
  assert(cfg.samples_per_cell >= 1);
  assert(cfg.beta > 0.0 && cfg.beta <= 1.0);
  ValidRegion region;
  region.grid = grid;
  region.probes = probes_already_used;

  std::vector<CellState> states(grid.cell_count(), CellState::Candidate);
  states[cell_index(grid, seed_cell)] = CellState::Valid;
  region.witnesses.emplace(seed_cell, seed_witness);

  std::deque<CellId> queue{seed_cell};
  while (!queue.empty() && !region.truncated) {
    CellId v = queue.front();
    queue.pop_front();
    for (const CellId& u : neighbors_moore(grid, v)) {
      CellState& st = states[cell_index(grid, u)];
      if (st == CellState::Valid) continue;
      if (st == CellState::Invalid && !cfg.band_retest) continue;
      InputBox band = boundary_band(grid, u, v, cfg.beta);
      bool found = false;
      for (int t = 0; t < cfg.samples_per_cell && !found; ++t) {
        if (region.probes >= cfg.probe_budget) {
          region.truncated = true;
          break;
        }
        Valuation pt = sample_uniform(band, rng);
        ++region.probes;
        if (eval_condition(pc, pt)) {
          found = true;
          region.witnesses.emplace(u, std::move(pt));
        }
      }
      if (found) {
        st = CellState::Valid;
        queue.push_back(u);
      } else if (!region.truncated) {
        st = CellState::Invalid;
      } else {
        break;
      }
    }
  }

  for (const auto& kv : region.witnesses) region.valid.push_back(kv.first);
  return region;
}

}  // namespace pathgen
