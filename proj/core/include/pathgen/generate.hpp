#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "pathgen/domain.hpp"
#include "pathgen/expr.hpp"
#include "pathgen/search.hpp"

namespace pathgen {

enum class Method { Rt, Prt, Art };

std::string_view method_name(Method m);

// Accounting identity: rejected == generated_total - requested, where
// generated_total counts every concrete condition evaluation including
// search and expansion probes (search_probes keeps the breakdown, 0 for
// rt and prt). Every accepted point satisfies the condition.
struct GenReport {
  Method method = Method::Rt;
  int n = 0;                        // grid resolution used; 0 for rt
  std::uint64_t seed = 0;
  std::int64_t requested = 0;
  std::vector<Valuation> accepted;  // size == requested on success
  std::int64_t generated_total = 0;
  std::int64_t rejected = 0;
  std::int64_t search_probes = 0;
  bool truncated_region = false;    // art only: expansion hit the probe budget
  std::vector<CellId> valid_cells;  // art only: cells sampled from, canonical order
};

// Called with each rejected point as it is discarded.
using RejectSink = std::function<void(const Valuation&)>;

// Plain rejection sampling over the whole box. Throws AcceptanceTooLowError
// once generated_total reaches cap_factor * count with the suite incomplete.
GenReport generate_rt(const PathCondition& pc, const InputBox& box,
                      std::int64_t count, std::uint64_t seed,
                      double cap_factor = 1000.0,
                      const RejectSink& reject_sink = {});

// Partition at k per dimension, drop every cell interval refutation proves
// unsatisfiable, then sample uniformly from the surviving cells (equal-size
// cells make cell-then-point sampling uniform over their union). Throws
// UnsatProvenError when every cell is refuted, a sound unsatisfiability
// verdict over the box.
GenReport generate_prt(const PathCondition& pc, const InputBox& box, int k,
                       std::int64_t count, std::uint64_t seed,
                       double cap_factor = 1000.0,
                       const RejectSink& reject_sink = {});

// Find a first valid cell, grow the valid region, then sample uniformly
// from the valid cells. As a 1x1 grid does not divide the box, the
// cfg.n0 == cfg.n_max == 1 case degenerates to plain whole-box sampling
// with no search phase. Propagates ExhaustedError from the search.
GenReport generate_art(const PathCondition& pc, const InputBox& box,
                       const SearchConfig& cfg, std::int64_t count,
                       std::uint64_t seed, double cap_factor = 1000.0,
                       const RejectSink& reject_sink = {});

}  // namespace pathgen
