#include "pathgen/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "pathgen/errors.hpp"

namespace pathgen {

namespace {

std::uint64_t method_id(Method m) {
  switch (m) {
    case Method::Rt: return 1;
    case Method::Prt: return 2;
    case Method::Art: return 3;
  }
  return 0;
}

void run_cell(const PathCondition& pc, const InputBox& box,
              const BenchSpec& spec, BenchRow& row) {
  std::vector<double> generated, probes;
  generated.reserve(static_cast<std::size_t>(row.trials));
  probes.reserve(static_cast<std::size_t>(row.trials));
  for (int t = 0; t < row.trials; ++t) {
    std::uint64_t seed = trial_seed(spec.base_seed, row.method, row.n, row.requested, t);
    try {
      GenReport rep;
      switch (row.method) {
        case Method::Rt:
          rep = generate_rt(pc, box, row.requested, seed, spec.cap_factor);
          break;
        case Method::Prt:
          rep = generate_prt(pc, box, row.n, row.requested, seed, spec.cap_factor);
          break;
        case Method::Art: {
          SearchConfig cfg = spec.art;
          cfg.n0 = cfg.n_max = row.n;
          rep = generate_art(pc, box, cfg, row.requested, seed, spec.cap_factor);
          break;
        }
      }
      generated.push_back(static_cast<double>(rep.generated_total));
      probes.push_back(static_cast<double>(rep.search_probes));
    } catch (const Error& e) {
      row.failed = true;
      row.note = e.what();
      break;
    }
  }
  if (row.failed) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    row.mean_generated = row.sd_generated = nan;
    row.min_generated = row.max_generated = nan;
    row.mean_rejected = row.mean_search_probes = nan;
    return;
  }
  double sum = 0.0, min = generated[0], max = generated[0];
  for (double g : generated) {
    sum += g;
    min = std::min(min, g);
    max = std::max(max, g);
  }
  double mean = sum / static_cast<double>(generated.size());
  double ss = 0.0;
  for (double g : generated) ss += (g - mean) * (g - mean);
  double sd = generated.size() > 1
                  ? std::sqrt(ss / static_cast<double>(generated.size() - 1))
                  : 0.0;
  double psum = 0.0;
  for (double p : probes) psum += p;
  row.mean_generated = mean;
  row.sd_generated = sd;
  row.min_generated = min;
  row.max_generated = max;
  row.mean_rejected = mean - static_cast<double>(row.requested);
  row.mean_search_probes = psum / static_cast<double>(probes.size());
}

std::string cell_text(double v) {
  if (std::isnan(v)) return "NaN";
  return format_double(v);
}

std::string row_fields(const BenchRow& r, char sep) {
  std::string out;
  out += method_name(r.method);
  out += sep;
  out += std::to_string(r.n);
  out += sep;
  out += std::to_string(r.requested);
  out += sep;
  out += std::to_string(r.trials);
  for (double v : {r.mean_generated, r.sd_generated, r.min_generated,
                   r.max_generated, r.mean_rejected, r.mean_search_probes}) {
    out += sep;
    out += cell_text(v);
  }
  return out;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, Method m, int n,
                         std::int64_t requested, int trial) {
  return derive_seed(base, {method_id(m), static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(requested),
                            static_cast<std::uint64_t>(trial)});
}

BenchTable run_bench(const PathCondition& pc, const InputBox& box,
                     const BenchSpec& spec) {
  std::vector<Method> methods = spec.methods;
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  std::vector<int> ns = spec.resolutions;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<std::int64_t> reqs = spec.requested;
  std::sort(reqs.begin(), reqs.end());
  reqs.erase(std::unique(reqs.begin(), reqs.end()), reqs.end());

  BenchTable table;
  for (Method m : methods) {
    if (m == Method::Rt) {
      for (std::int64_t req : reqs) {
        BenchRow row;
        row.method = m;
        row.n = 0;
        row.requested = req;
        row.trials = spec.trials;
        table.rows.push_back(std::move(row));
      }
    } else {
      for (int n : ns) {
        for (std::int64_t req : reqs) {
          BenchRow row;
          row.method = m;
          row.n = n;
          row.requested = req;
          row.trials = spec.trials;
          table.rows.push_back(std::move(row));
        }
      }
    }
  }

  int jobs = std::max(1, spec.jobs);
  if (jobs == 1 || table.rows.size() <= 1) {
    for (BenchRow& row : table.rows) run_cell(pc, box, spec, row);
    return table;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= table.rows.size()) return;
      run_cell(pc, box, spec, table.rows[i]);
    }
  };
  std::vector<std::thread> pool;
  int threads = std::min<int>(jobs, static_cast<int>(table.rows.size()));
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return table;
}

std::string format_table(const BenchTable& table, TableFormat format) {
  std::string out;
  if (format == TableFormat::Markdown) {
    out += "| method | n | requested | trials | mean_generated | sd_generated "
           "| min_generated | max_generated | mean_rejected | mean_search_probes "
           "| Notes |\n";
    out += "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const BenchRow& r : table.rows) {
      out += "| ";
      std::string fields = row_fields(r, '|');
      // row_fields joins with bare '|'; pad for readability
      std::string padded;
      for (char c : fields) {
        if (c == '|') {
          padded += " | ";
        } else {
          padded += c;
        }
      }
      out += padded;
      out += " | ";
      out += r.note;
      out += " |\n";
    }
    return out;
  }
  char sep = format == TableFormat::Csv ? ',' : '\t';
  std::string header = kBenchHeader;
  if (sep != ',') {
    for (char& c : header) {
      if (c == ',') c = '\t';
    }
  }
  out += header;
  out += '\n';
  for (const BenchRow& r : table.rows) {
    out += row_fields(r, sep);
    out += '\n';
  }
  return out;
}

}  // namespace pathgen
