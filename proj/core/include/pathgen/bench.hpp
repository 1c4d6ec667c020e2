#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathgen/domain.hpp"
#include "pathgen/expr.hpp"
#include "pathgen/generate.hpp"

namespace pathgen {

struct BenchSpec {
  std::vector<Method> methods;           // subset of {rt, prt, art}
  std::vector<int> resolutions;          // grid resolutions for prt/art
  std::vector<std::int64_t> requested;
  int trials = 30;
  std::uint64_t base_seed = 42;
  SearchConfig art;                      // knobs for art cells; n0/n_max set per cell
  double cap_factor = 1000.0;
  int jobs = 1;
};

struct BenchRow {
  Method method = Method::Rt;
  int n = 0;                 // 0 for rt
  std::int64_t requested = 0;
  int trials = 0;
  bool failed = false;       // stats are NaN; note explains
  std::string note;
  double mean_generated = 0.0;
  double sd_generated = 0.0;
  double min_generated = 0.0;
  double max_generated = 0.0;
  double mean_rejected = 0.0;
  double mean_search_probes = 0.0;
};

struct BenchTable {
  std::vector<BenchRow> rows;  // (method, n, requested) ascending
};

// Every trial of every cell draws from its own stream, derived purely from
// (base seed, method, n, requested, trial index): all methods see identical
// stream constructions, cells stay independent, and adding trials never
// perturbs earlier ones. Trials are 0-based.
std::uint64_t trial_seed(std::uint64_t base, Method m, int n,
                         std::int64_t requested, int trial);

// Runs the full matrix; a failing cell (Exhausted, UnsatProven, ...) gets
// NaN statistics and a note instead of aborting the rest. Cells may run
// concurrently (spec.jobs); row order is deterministic regardless.
BenchTable run_bench(const PathCondition& pc, const InputBox& box,
                     const BenchSpec& spec);

enum class TableFormat { Csv, Tsv, Markdown };

inline constexpr const char* kBenchHeader =
    "method,n,requested,trials,mean_generated,sd_generated,min_generated,"
    "max_generated,mean_rejected,mean_search_probes";

// Csv/Tsv emit exactly the ten schema columns (notes go to diagnostics, not
// the table); Markdown adds a trailing Notes column.
std::string format_table(const BenchTable& table, TableFormat format);

}  // namespace pathgen
