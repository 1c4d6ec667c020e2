// pathgen: command-line front end for the path-condition test-data toolkit.
//
// Subcommands
//   gen         one generation run, optional point dump
//   bench       (method, n, requested) matrix with repeated seeded trials
//   oracle      brute-force satisfying fraction and per-cell validity map
//   validcells  one search + expansion pass, printed cell by cell
//
// Exit codes: 0 success, 2 input or parse error, 3 unsat/exhausted,
// 4 acceptance cap hit, 5 internal error. Every failure prints one line
// "pathgen: error: <kind>: <message>" to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathgen/bench.hpp"
#include "pathgen/domain.hpp"
#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"
#include "pathgen/generate.hpp"
#include "pathgen/grid.hpp"
#include "pathgen/oracle.hpp"
#include "pathgen/parse.hpp"
#include "pathgen/search.hpp"

namespace {

using namespace pathgen;

struct CliError {
  int code;
  std::string kind;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& kind, const std::string& message) {
  throw CliError{code, kind, message};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(2, "input", "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Shared --condition/--condition-file/--domain plumbing.
struct ProblemArgs {
  std::string condition;
  std::string condition_file;
  std::string domain;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--condition", condition, "Path condition text");
    auto* f = cmd->add_option("--condition-file", condition_file,
                              "File containing the path condition");
    c->excludes(f);
    cmd->add_option("--domain", domain, "Domain spec, e.g. \"x:int:0..15;y:int:0..15\"")
        ->required();
  }

  PathConditionPtr parse_pc() const {
    std::string text = condition;
    if (!condition_file.empty()) text = read_file(condition_file);
    if (text.empty()) fail(2, "input", "no condition given (use --condition or --condition-file)");
    try {
      return parse_condition(text);
    } catch (const ParseError& e) {
      fail(2, "parse", std::string(e.what()));
    }
  }

  InputBox parse_box() const {
    try {
      return parse_domain(domain);
    } catch (const ParseError& e) {
      fail(2, "parse", std::string(e.what()));
    }
  }
};

Method parse_method(const std::string& name) {
  if (name == "rt") return Method::Rt;
  if (name == "prt") return Method::Prt;
  if (name == "art") return Method::Art;
  fail(2, "input", "unknown method '" + name + "' (expected rt, prt or art)");
}

// One accepted or rejected point per line, comma separated in domain order;
// int dimensions print without a decimal point.
std::string format_point(const InputBox& box, const Valuation& v) {
  std::string out;
  for (std::size_t i = 0; i < box.dims.size(); ++i) {
    if (i) out += ',';
    const VarDomain& d = box.dims[i];
    double x = v.at(d.name);
    if (d.kind == VarKind::Int) {
      out += std::to_string(static_cast<long long>(x));
    } else {
      out += format_double(x);
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(2, "input", "cannot open output file '" + path + "'");
  out << text;
}

struct GenArgs {
  ProblemArgs problem;
  std::string method = "rt";
  int n = 1;
  std::int64_t requested = 1;
  std::uint64_t seed = 0;
  int samples_per_cell = 8;
  double beta = 0.25;
  int n_max = 0;  // 0: single resolution (n_max = n)
  double cap_factor = 1000.0;
  bool no_retest = false;
  std::string out_path;
  std::string rejects_path;
};

int cmd_gen(const GenArgs& a) {
  PathConditionPtr pc = a.problem.parse_pc();
  InputBox box = a.problem.parse_box();
  Method m = parse_method(a.method);

  std::ofstream rejects;
  RejectSink sink;
  if (!a.rejects_path.empty()) {
    rejects.open(a.rejects_path, std::ios::binary);
    if (!rejects) fail(2, "input", "cannot open output file '" + a.rejects_path + "'");
    sink = [&](const Valuation& v) { rejects << format_point(box, v) << '\n'; };
  }

  GenReport rep;
  switch (m) {
    case Method::Rt:
      rep = generate_rt(*pc, box, a.requested, a.seed, a.cap_factor, sink);
      break;
    case Method::Prt:
      rep = generate_prt(*pc, box, a.n, a.requested, a.seed, a.cap_factor, sink);
      break;
    case Method::Art: {
      SearchConfig cfg;
      cfg.n0 = a.n;
      cfg.n_max = a.n_max > 0 ? a.n_max : a.n;
      cfg.samples_per_cell = a.samples_per_cell;
      cfg.beta = a.beta;
      cfg.band_retest = !a.no_retest;
      rep = generate_art(*pc, box, cfg, a.requested, a.seed, a.cap_factor, sink);
      break;
    }
  }

  std::printf("method: %s\n", std::string(method_name(rep.method)).c_str());
  if (rep.method != Method::Rt) std::printf("n: %d\n", rep.n);
  std::printf("seed: %llu\n", static_cast<unsigned long long>(rep.seed));
  std::printf("requested: %lld\n", static_cast<long long>(rep.requested));
  std::printf("accepted: %zu\n", rep.accepted.size());
  std::printf("generated_total: %lld\n", static_cast<long long>(rep.generated_total));
  std::printf("rejected: %lld\n", static_cast<long long>(rep.rejected));
  std::printf("search_probes: %lld\n", static_cast<long long>(rep.search_probes));
  if (rep.truncated_region) std::printf("note: expansion hit the probe budget\n");

  if (!a.out_path.empty()) {
    std::string text;
    for (const Valuation& v : rep.accepted) {
      text += format_point(box, v);
      text += '\n';
    }
    write_text_file(a.out_path, text);
  }
  return 0;
}

struct BenchArgs {
  ProblemArgs problem;
  std::vector<std::string> methods{"rt", "prt", "art"};
  std::vector<int> ns{4};
  std::vector<std::int64_t> requested{1000};
  int trials = 30;
  std::uint64_t seed = 42;
  int samples_per_cell = 8;
  double beta = 0.25;
  double cap_factor = 1000.0;
  bool no_retest = false;
  int jobs = 1;
  std::string out_path;
  std::string format = "csv";
};

int cmd_bench(const BenchArgs& a) {
  PathConditionPtr pc = a.problem.parse_pc();
  InputBox box = a.problem.parse_box();

  BenchSpec spec;
  for (const std::string& name : a.methods) spec.methods.push_back(parse_method(name));
  spec.resolutions = a.ns;
  spec.requested = a.requested;
  spec.trials = a.trials;
  spec.base_seed = a.seed;
  spec.art.samples_per_cell = a.samples_per_cell;
  spec.art.beta = a.beta;
  spec.art.band_retest = !a.no_retest;
  spec.cap_factor = a.cap_factor;
  spec.jobs = a.jobs;
  if (spec.trials < 1) fail(2, "input", "--trials must be at least 1");
  for (std::int64_t r : spec.requested)
    if (r < 1) fail(2, "input", "--requested values must be at least 1");
  for (int n : spec.resolutions)
    if (n < 1) fail(2, "input", "--n values must be at least 1");

  TableFormat fmt;
  if (a.format == "csv") fmt = TableFormat::Csv;
  else if (a.format == "tsv") fmt = TableFormat::Tsv;
  else if (a.format == "markdown") fmt = TableFormat::Markdown;
  else fail(2, "input", "unknown format '" + a.format + "' (expected csv, tsv or markdown)");

  BenchTable table = run_bench(*pc, box, spec);
  for (const BenchRow& row : table.rows) {
    if (row.failed) {
      std::fprintf(stderr, "pathgen: note: %s n=%d requested=%lld failed: %s\n",
                   std::string(method_name(row.method)).c_str(), row.n,
                   static_cast<long long>(row.requested), row.note.c_str());
    }
  }
  std::string text = format_table(table, fmt);
  if (a.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(a.out_path, text);
  }
  return 0;
}

struct OracleArgs {
  ProblemArgs problem;
  int n = 0;
  std::int64_t montecarlo = 0;
  std::uint64_t seed = 0;
  std::int64_t point_limit = 100'000'000;
};

int cmd_oracle(const OracleArgs& a) {
  PathConditionPtr pc = a.problem.parse_pc();
  InputBox box = a.problem.parse_box();

  OracleReport rep;
  if (a.montecarlo > 0) {
    rep = oracle_montecarlo(*pc, box, a.montecarlo, a.seed, a.n);
  } else {
    auto points = exhaustive_point_count(box);
    if (!points) {
      fail(2, "input",
           "domain has real-valued dimensions; exhaustive enumeration is impossible, "
           "pass --montecarlo <N>");
    }
    if (*points > static_cast<std::uint64_t>(a.point_limit)) {
      fail(2, "input",
           "domain has " + std::to_string(*points) + " integer points, over the exhaustive limit " +
               std::to_string(a.point_limit) + "; pass --montecarlo <N>");
    }
    rep = oracle_exhaustive(*pc, box, a.n, a.point_limit);
  }

  std::printf("mode: %s\n", rep.exhaustive ? "exhaustive" : "montecarlo");
  if (!rep.exhaustive) std::printf("seed: %llu\n", static_cast<unsigned long long>(rep.seed));
  std::printf("total: %llu\n", static_cast<unsigned long long>(rep.total));
  std::printf("satisfying: %llu\n", static_cast<unsigned long long>(rep.satisfying));
  std::printf("fraction: %.4f\n", rep.fraction);
  if (!rep.exhaustive)
    std::printf("wilson95: [%.4f, %.4f]\n", rep.wilson_lo, rep.wilson_hi);
  if (a.n > 0) {
    std::printf("valid cells (n=%d): %zu\n", rep.n, rep.valid_cells.size());
    for (const CellId& c : rep.valid_cells) {
      std::uint64_t count = rep.cell_satisfiers[cell_index(rep.grid, c)];
      if (rep.grid.dim_count() == 2) {
        std::printf("  %s %s satisfiers=%llu\n", cell_label(rep.grid, c).c_str(),
                    cell_tuple_text(c).c_str(), static_cast<unsigned long long>(count));
      } else {
        std::printf("  %s satisfiers=%llu\n", cell_tuple_text(c).c_str(),
                    static_cast<unsigned long long>(count));
      }
    }
  }
  return 0;
}

struct ValidCellsArgs {
  ProblemArgs problem;
  int n = 4;
  std::uint64_t seed = 0;
  int samples_per_cell = 8;
  double beta = 0.25;
  int n_max = 0;
  bool no_retest = false;
};

int cmd_validcells(const ValidCellsArgs& a) {
  PathConditionPtr pc = a.problem.parse_pc();
  InputBox box = a.problem.parse_box();

  SearchConfig cfg;
  cfg.n0 = a.n;
  cfg.n_max = a.n_max > 0 ? a.n_max : a.n;
  cfg.samples_per_cell = a.samples_per_cell;
  cfg.beta = a.beta;
  cfg.band_retest = !a.no_retest;

  RandomStream rng(a.seed);
  FirstValid first = find_first_valid(*pc, box, cfg, rng);
  ValidRegion region = expand_valid(*pc, first.grid, first.cell, first.witness, cfg,
                                    rng, first.probes);

  std::printf("n: %d\n", region.grid.n);
  std::printf("seed: %llu\n", static_cast<unsigned long long>(a.seed));
  std::printf("search_probes: %llu\n", static_cast<unsigned long long>(region.probes));
  std::printf("valid cells: %zu\n", region.valid.size());
  for (const CellId& c : region.valid) {
    const Valuation& w = region.witnesses.at(c);
    if (region.grid.dim_count() == 2) {
      std::printf("  %s %s witness=%s\n", cell_label(region.grid, c).c_str(),
                  cell_tuple_text(c).c_str(), format_point(box, w).c_str());
    } else {
      std::printf("  %s witness=%s\n", cell_tuple_text(c).c_str(),
                  format_point(box, w).c_str());
    }
  }
  if (region.truncated) std::printf("note: expansion hit the probe budget\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-condition random test-data generator"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "Run one generation and print a summary");
  gen.problem.attach(g);
  g->add_option("--method", gen.method, "Generation method: rt, prt or art");
  g->add_option("--n,--k", gen.n, "Grid resolution per dimension");
  g->add_option("--requested", gen.requested, "Number of accepted points to produce")
      ->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--samples-per-cell", gen.samples_per_cell, "Band probes per expansion step")
      ->check(CLI::PositiveNumber);
  g->add_option("--beta", gen.beta, "Boundary band fraction");
  g->add_option("--n-max", gen.n_max, "Finest search resolution (art; default: --n)");
  g->add_option("--cap-factor", gen.cap_factor, "Abort once generated exceeds cap * requested");
  g->add_flag("--no-retest", gen.no_retest, "Skip re-probing cells already marked invalid");
  g->add_option("--out", gen.out_path, "Write accepted points here, one per line");
  g->add_option("--dump-rejects", gen.rejects_path, "Stream rejected points here");

  BenchArgs bench;
  CLI::App* b = app.add_subcommand("bench", "Run the benchmark matrix");
  bench.problem.attach(b);
  b->add_option("--methods,--method", bench.methods, "Methods to run (comma separated)")
      ->delimiter(',');
  b->add_option("--n,--k", bench.ns, "Grid resolutions (comma separated)")->delimiter(',');
  b->add_option("--requested", bench.requested, "Suite lengths (comma separated)")
      ->delimiter(',');
  b->add_option("--trials", bench.trials, "Trials per matrix cell");
  b->add_option("--seed", bench.seed, "Base seed for trial-seed derivation");
  b->add_option("--samples-per-cell", bench.samples_per_cell, "Band probes per expansion step")
      ->check(CLI::PositiveNumber);
  b->add_option("--beta", bench.beta, "Boundary band fraction");
  b->add_option("--cap-factor", bench.cap_factor, "Abort once generated exceeds cap * requested");
  b->add_flag("--no-retest", bench.no_retest, "Skip re-probing cells already marked invalid");
  b->add_option("--jobs", bench.jobs, "Matrix cells to run concurrently")
      ->check(CLI::PositiveNumber);
  b->add_option("--out", bench.out_path, "Write the table here instead of stdout");
  b->add_option("--format", bench.format, "Table format: csv, tsv or markdown");

  OracleArgs oracle;
  CLI::App* o = app.add_subcommand("oracle", "Count satisfying points by brute force");
  oracle.problem.attach(o);
  o->add_option("--n,--k", oracle.n, "Also report per-cell validity at this resolution");
  o->add_option("--montecarlo", oracle.montecarlo, "Sample N uniform points instead of enumerating");
  o->add_option("--seed", oracle.seed, "RNG seed (montecarlo mode)");
  o->add_option("--point-limit", oracle.point_limit, "Exhaustive enumeration ceiling");

  ValidCellsArgs vc;
  CLI::App* v = app.add_subcommand("validcells", "Search and expand once, list the valid cells");
  vc.problem.attach(v);
  v->add_option("--n,--k", vc.n, "Grid resolution per dimension");
  v->add_option("--seed", vc.seed, "RNG seed");
  v->add_option("--samples-per-cell", vc.samples_per_cell, "Band probes per expansion step")
      ->check(CLI::PositiveNumber);
  v->add_option("--beta", vc.beta, "Boundary band fraction");
  v->add_option("--n-max", vc.n_max, "Finest search resolution (default: --n)");
  v->add_flag("--no-retest", vc.no_retest, "Skip re-probing cells already marked invalid");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      fail(2, "usage", e.what());
    }
    if (g->parsed()) return cmd_gen(gen);
    if (b->parsed()) return cmd_bench(bench);
    if (o->parsed()) return cmd_oracle(oracle);
    if (v->parsed()) return cmd_validcells(vc);
    fail(5, "internal", "no subcommand dispatched");
  } catch (const CliError& e) {
    std::fprintf(stderr, "pathgen: error: %s: %s\n", e.kind.c_str(), e.message.c_str());
    return e.code;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "pathgen: error: parse: %s\n", e.what());
    return 2;
  } catch (const UnboundVariableError& e) {
    std::fprintf(stderr, "pathgen: error: unbound-variable: %s\n", e.what());
    return 2;
  } catch (const DegenerateDomainError& e) {
    std::fprintf(stderr, "pathgen: error: degenerate-domain: %s\n", e.what());
    return 2;
  } catch (const UnsatProvenError& e) {
    std::fprintf(stderr, "pathgen: error: unsat-proven: %s\n", e.what());
    return 3;
  } catch (const ExhaustedError& e) {
    std::fprintf(stderr, "pathgen: error: exhausted: %s\n", e.what());
    return 3;
  } catch (const AcceptanceTooLowError& e) {
    std::fprintf(stderr, "pathgen: error: acceptance-too-low: %s\n", e.what());
    return 4;
  } catch (const Error& e) {
    std::fprintf(stderr, "pathgen: error: input: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pathgen: error: internal: %s\n", e.what());
    return 5;
  }
}
