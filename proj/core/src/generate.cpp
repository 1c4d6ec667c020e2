#include "pathgen/generate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"
#include "pathgen/grid.hpp"
#include "pathgen/interval.hpp"

namespace pathgen {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Rt: return "rt";
    case Method::Prt: return "prt";
    case Method::Art: return "art";
  }
  return "?";
}

namespace {

std::int64_t probe_cap(double cap_factor, std::int64_t count) {
  assert(cap_factor >= 1.0);
  double cap = cap_factor * static_cast<double>(count);
  if (cap >= 9.0e18) return INT64_MAX;
  return std::max<std::int64_t>(count, static_cast<std::int64_t>(cap));
}

// Shared accept/reject loop: draw_point must consume a fixed number of
// stream draws per call.
template <typename DrawPoint>
void run_rejection(const PathCondition& pc, GenReport& report,
                   std::int64_t count, std::int64_t cap,
                   const RejectSink& reject_sink, DrawPoint&& draw_point) {
  report.accepted.reserve(static_cast<std::size_t>(count));
  while (static_cast<std::int64_t>(report.accepted.size()) < count) {
    if (report.generated_total >= cap) {
      throw AcceptanceTooLowError(static_cast<std::uint64_t>(report.generated_total),
                                  report.accepted.size());
    }
    Valuation pt = draw_point();
    ++report.generated_total;
    if (eval_condition(pc, pt)) {
      report.accepted.push_back(std::move(pt));
    } else if (reject_sink) {
      reject_sink(pt);
    }
  }
  report.rejected = report.generated_total - count;
}

}  // namespace

GenReport generate_rt(const PathCondition& pc, const InputBox& box,
                      std::int64_t count, std::uint64_t seed,
                      double cap_factor, const RejectSink& reject_sink) {
  assert(count >= 1);
  GenReport report;
  report.method = Method::Rt;
  report.seed = seed;
  report.requested = count;
  RandomStream rng(seed);
  run_rejection(pc, report, count, probe_cap(cap_factor, count), reject_sink,
                [&] { return sample_uniform(box, rng); });
  return report;
}

GenReport generate_prt(const PathCondition& pc, const InputBox& box, int k,
                       std::int64_t count, std::uint64_t seed,
                       double cap_factor, const RejectSink& reject_sink) {
  assert(count >= 1 && k >= 1);
  GenReport report;
  report.method = Method::Prt;
  report.n = k;
  report.seed = seed;
  report.requested = count;

  GridSpec grid = partition(box, k);
  std::vector<InputBox> surviving;
  for (const CellId& c : all_cells(grid)) {
    InputBox cb = cell_box(grid, c);
    if (refute_pc(pc, cb) == Refutation::Unknown) surviving.push_back(std::move(cb));
  }
  if (surviving.empty()) {
    throw UnsatProvenError("every cell of the " + std::to_string(k) +
                           "-per-dimension grid is refuted");
  }

  RandomStream rng(seed);
  run_rejection(pc, report, count, probe_cap(cap_factor, count), reject_sink, [&] {
    const InputBox& cell = surviving[rng.next_index(surviving.size())];
    return sample_uniform(cell, rng);
  });
  return report;
}

GenReport generate_art(const PathCondition& pc, const InputBox& box,
                       const SearchConfig& cfg, std::int64_t count,
                       std::uint64_t seed, double cap_factor,
                       const RejectSink& reject_sink) {
  assert(count >= 1);
  GenReport report;
  report.method = Method::Art;
  report.seed = seed;
  report.requested = count;
  RandomStream rng(seed);
  std::int64_t cap = probe_cap(cap_factor, count);

  if (cfg.n0 == 1 && cfg.n_max == 1) {
    report.n = 1;
    run_rejection(pc, report, count, cap, reject_sink,
                  [&] { return sample_uniform(box, rng); });
    return report;
  }

  FirstValid first = find_first_valid(pc, box, cfg, rng);
  ValidRegion region = expand_valid(pc, first.grid, first.cell, first.witness,
                                    cfg, rng, first.probes);
  report.n = region.grid.n;
  report.search_probes = region.probes;
  report.generated_total = region.probes;
  report.truncated_region = region.truncated;
  report.valid_cells = region.valid;

  std::vector<InputBox> boxes;
  boxes.reserve(region.valid.size());
  for (const CellId& c : region.valid) boxes.push_back(cell_box(region.grid, c));

  run_rejection(pc, report, count, cap, reject_sink, [&] {
    const InputBox& cell = boxes[rng.next_index(boxes.size())];
    return sample_uniform(cell, rng);
  });
  return report;
}

}  // namespace pathgen
