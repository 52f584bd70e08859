#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qdecomp/cycle_decomp.hpp"
#include "qdecomp/decomposition.hpp"
#include "qdecomp/edge_color.hpp"
#include "qdecomp/path_decomp.hpp"
#include "qdecomp/randgen.hpp"
#include "qdecomp/rng.hpp"
#include "qdecomp/verify.hpp"

namespace qdecomp {

enum class SweepTask { Cycles, Paths, Forests, Color };

inline const char* to_string(SweepTask t) {
  switch (t) {
    case SweepTask::Cycles: return "cycles";
    case SweepTask::Paths: return "paths";
    case SweepTask::Forests: return "forests";
    case SweepTask::Color: return "color";
  }
  return "?";
}

inline SweepTask parse_task(const std::string& s) {
  for (auto t : {SweepTask::Cycles, SweepTask::Paths, SweepTask::Forests, SweepTask::Color})
    if (s == to_string(t)) return t;
  fail(ErrorCode::UsageError, "unknown sweep task '" + s + "'");
}

struct SweepConfig {
  std::vector<int> ns{30, 60, 100};
  std::vector<double> ps{0.3, 0.5, 0.7};
  std::vector<std::uint64_t> seeds;
  std::vector<SweepTask> tasks{SweepTask::Cycles, SweepTask::Paths, SweepTask::Forests, SweepTask::Color};
  // Per-cell parameters; p is replaced by the cell density. Empty means
  // QuasirandomParams::for_density(p) with eta widened to `eta`.
  std::optional<QuasirandomParams> profile;
  double eta = 0.5;
  int threads = 1;
};

struct SweepRow {
  int n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  SweepTask task = SweepTask::Cycles;
  bool success = false;
  int count = -1;  // parts produced; -1 when the run threw
  int bound = 0;   // count the verifier accepts, from the graph alone
  int max_degree = 0;
  int odd_count = 0;
  std::string dominant;  // "odd/2", "ceil(D/2)" or "tie"
  bool unique_max = false;
  bool class1_candidate = false;  // even order and the deficiency criterion allows D colours
  std::string route;
  std::string error;
  double seconds = 0;
};

namespace detail {

inline QuasirandomParams cell_params(const SweepConfig& cfg, double p) {
  QuasirandomParams q;
  if (cfg.profile) {
    q = *cfg.profile;
    q.p = p;
  } else {
    q = QuasirandomParams::for_density(p);
    q.eta = cfg.eta;
  }
  return q;
}

inline void run_cell(const SweepConfig& cfg, SweepRow& row) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = gen_gnp(row.n, row.p, row.seed);
  const auto prof = degree_profile(g);
  row.max_degree = prof.max_degree;
  row.odd_count = prof.odd_count;
  row.unique_max = prof.max_degree_vertices.size() == 1;
  const int half_odd = prof.odd_count / 2, half_delta = (prof.max_degree + 1) / 2;
  row.dominant = half_odd > half_delta ? "odd/2" : half_odd < half_delta ? "ceil(D/2)" : "tie";
  row.class1_candidate = row.n % 2 == 0 && overfull_criterion(g) == ColorClass::Class1Candidate;

  Rng rng(derive_seed(row.seed, static_cast<std::uint64_t>(row.task) + 1));
  const auto q = cell_params(cfg, row.p);
  try {
    Decomposition dec;
    switch (row.task) {
      case SweepTask::Cycles: {
        auto res = decompose_cycles_plus_matching(g, q, rng);
        dec = make_cycle_set(row.n, res.cycles, res.matching);
        break;
      }
      case SweepTask::Paths: dec = make_path_set(row.n, decompose_paths(g, q, rng)); break;
      case SweepTask::Forests: dec = make_forest_set(row.n, decompose_linear_forests(g, q, rng)); break;
      case SweepTask::Color: {
        auto rep = color_edges(g, q, rng);
        row.route = to_string(rep.route);
        dec = make_coloring(row.n, rep.coloring.color);
        break;
      }
    }
    const auto check = verify(g, dec);
    row.count = check.actual_count;
    row.bound = check.expected_count;
    row.success = check.ok;
    if (!check.ok && !check.violations.empty())
      row.error = "verify: " + check.violations.front().invariant + " " + check.violations.front().witness;
  } catch (const std::exception& e) {
    row.bound = expected_bound(g, row.task == SweepTask::Cycles  ? DecompositionKind::CycleSet
                                  : row.task == SweepTask::Paths ? DecompositionKind::PathSet
                                  : row.task == SweepTask::Forests ? DecompositionKind::LinearForestSet
                                                                   : DecompositionKind::EdgeColoring)
                    .first;
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Every (n, p, seed, task) cell, in that nesting order. Failures are recorded
/// in the row, never thrown. Cells are independent, so they may run on
/// several threads without changing any row except its timing.
inline std::vector<SweepRow> experiment_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  for (int n : cfg.ns)
    for (double p : cfg.ps)
      for (auto s : cfg.seeds)
        for (auto t : cfg.tasks) {
          SweepRow r;
          r.n = n, r.p = p, r.seed = s, r.task = t;
          rows.push_back(r);
        }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) detail::run_cell(cfg, rows[i]);
  };
  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

struct CellSummary {
  int n = 0;
  double p = 0;
  SweepTask task = SweepTask::Cycles;
  int runs = 0;
  int successes = 0;
  int at_bound = 0;       // successes that used exactly the bound
  int odd_dominant = 0;   // seeds where odd/2 > ceil(D/2)
  int delta_dominant = 0; // seeds where ceil(D/2) > odd/2
  double seconds = 0;
  double success_rate() const { return runs ? static_cast<double>(successes) / runs : 0.0; }
};

inline std::vector<CellSummary> summarize(const std::vector<SweepRow>& rows) {
  std::map<std::tuple<int, double, int>, CellSummary> cells;
  for (const auto& r : rows) {
    auto& c = cells[{r.n, r.p, static_cast<int>(r.task)}];
    c.n = r.n, c.p = r.p, c.task = r.task;
    ++c.runs;
    c.successes += r.success;
    c.at_bound += r.success && r.count == r.bound;
    c.odd_dominant += r.dominant == "odd/2";
    c.delta_dominant += r.dominant == "ceil(D/2)";
    c.seconds += r.seconds;
  }
  std::vector<CellSummary> out;
  for (auto& [k, c] : cells) out.push_back(c);
  return out;
}

/// One CSV line per row. Timing is optional so the file can be compared byte
/// for byte across runs.
inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool timings = false) {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  out << "n,p,seed,task,success,count,bound,max_degree,odd_count,dominant,unique_max,class1_candidate,route,error";
  if (timings) out << ",seconds";
  out << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.p << ',' << r.seed << ',' << to_string(r.task) << ',' << r.success << ',' << r.count << ','
        << r.bound << ',' << r.max_degree << ',' << r.odd_count << ',' << r.dominant << ',' << r.unique_max << ','
        << r.class1_candidate << ',' << r.route << ',' << clean(r.error);
    if (timings) out << ',' << std::fixed << std::setprecision(4) << r.seconds << std::defaultfloat;
    out << '\n';
  }
}

inline void write_sweep_table(std::ostream& out, const std::vector<CellSummary>& cells, bool timings = false) {
  out << std::left << std::setw(6) << "n" << std::setw(6) << "p" << std::setw(9) << "task" << std::setw(8) << "runs"
      << std::setw(10) << "success" << std::setw(10) << "at-bound" << std::setw(10) << "odd-dom" << std::setw(10)
      << "D-dom";
  if (timings) out << "seconds";
  out << '\n';
  for (const auto& c : cells) {
    std::ostringstream rate;
    rate << std::fixed << std::setprecision(2) << c.success_rate();
    out << std::setw(6) << c.n << std::setw(6) << c.p << std::setw(9) << to_string(c.task) << std::setw(8) << c.runs
        << std::setw(10) << rate.str() << std::setw(10) << c.at_bound << std::setw(10) << c.odd_dominant
        << std::setw(10) << c.delta_dominant;
    if (timings) out << std::fixed << std::setprecision(2) << c.seconds << std::defaultfloat;
    out << '\n';
  }
  out << std::right;
}

}  // namespace qdecomp
