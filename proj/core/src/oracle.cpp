#include "pathgen/oracle.hpp"

#include <cassert>
#include <cmath>

#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"
#include "pathgen/rng.hpp"

namespace pathgen {

namespace {

void finish_cells(OracleReport& r) {
  for (std::uint64_t i = 0; i < r.cell_satisfiers.size(); ++i) {
    if (r.cell_satisfiers[i] > 0) r.valid_cells.push_back(cell_at(r.grid, i));
  }
}

double wilson_bound(double p, double nt, bool upper) {
  constexpr double z = 1.959963984540054;  // 97.5th normal quantile
  double z2 = z * z;
  double denom = 1.0 + z2 / nt;
  double center = p + z2 / (2.0 * nt);
  double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  return (upper ? center + half : center - half) / denom;
}

}  // namespace

std::optional<std::uint64_t> exhaustive_point_count(const InputBox& box) {
  std::uint64_t total = 1;
  for (const auto& d : box.dims) {
    if (d.kind != VarKind::Int) return std::nullopt;
    std::uint64_t size = static_cast<std::uint64_t>(
        static_cast<std::int64_t>(d.hi) - static_cast<std::int64_t>(d.lo) + 1);
    if (size != 0 && total > UINT64_MAX / size) return UINT64_MAX;
    total *= size;
  }
  return total;
}

OracleReport oracle_exhaustive(const PathCondition& pc, const InputBox& box,
                               int n, std::uint64_t point_limit) {
  OracleReport r;
  r.exhaustive = true;
  r.n = n;
  InputBox scan = box;
  if (n > 0) {
    r.grid = partition(box, n);
    r.cell_satisfiers.assign(r.grid.cell_count(), 0);
    scan = r.grid.base;
  }
  auto points = exhaustive_point_count(scan);
  if (!points) throw Error("exhaustive oracle needs integer dimensions");
  if (*points > point_limit) {
    throw Error("box holds " + std::to_string(*points) +
                " points, over the exhaustive limit of " +
                std::to_string(point_limit));
  }

  const int d = scan.dim_count();
  std::vector<std::int64_t> lo(d), hi(d), cur(d);
  Valuation v;
  for (int i = 0; i < d; ++i) {
    lo[i] = static_cast<std::int64_t>(scan.dims[i].lo);
    hi[i] = static_cast<std::int64_t>(scan.dims[i].hi);
    cur[i] = lo[i];
    v[scan.dims[i].name] = static_cast<double>(lo[i]);
  }
  for (;;) {
    bool sat = eval_condition(pc, v);
    if (contains(box, v)) {
      ++r.total;
      if (sat) ++r.satisfying;
    }
    if (sat && n > 0) {
      ++r.cell_satisfiers[cell_index(r.grid, locate_cell(r.grid, v))];
    }
    int i = d - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      v[scan.dims[i].name] = static_cast<double>(lo[i]);
      --i;
    }
    if (i < 0) break;
    ++cur[i];
    v[scan.dims[i].name] = static_cast<double>(cur[i]);
  }
  r.fraction = r.total ? static_cast<double>(r.satisfying) / static_cast<double>(r.total) : 0.0;
  if (n > 0) finish_cells(r);
  return r;
}

OracleReport oracle_montecarlo(const PathCondition& pc, const InputBox& box,
                               std::uint64_t samples, std::uint64_t seed, int n) {
  assert(samples >= 1);
  OracleReport r;
  r.exhaustive = false;
  r.seed = seed;
  r.n = n;
  if (n > 0) {
    r.grid = partition(box, n);
    r.cell_satisfiers.assign(r.grid.cell_count(), 0);
  }
  RandomStream rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Valuation v = sample_uniform(box, rng);
    ++r.total;
    if (eval_condition(pc, v)) {
      ++r.satisfying;
      if (n > 0) ++r.cell_satisfiers[cell_index(r.grid, locate_cell(r.grid, v))];
    }
  }
  r.fraction = static_cast<double>(r.satisfying) / static_cast<double>(r.total);
  double nt = static_cast<double>(r.total);
  r.wilson_lo = std::max(0.0, wilson_bound(r.fraction, nt, false));
  r.wilson_hi = std::min(1.0, wilson_bound(r.fraction, nt, true));
  if (n > 0) finish_cells(r);
  return r;
}

}  // namespace pathgen
