#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "qdecomp/qdecomp.hpp"

using namespace qdecomp;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kHypothesis = 3, kExhausted = 4, kDeltaPlusOne = 10 };

struct Globals {
  std::uint64_t seed = 1;
  std::string params_file;
  std::string out;
};

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::HypothesisViolated:
    case ErrorCode::OddOrder:
    case ErrorCode::MatchingDeficient:
    case ErrorCode::RegularityMismatch:
    case ErrorCode::InsufficientAnchors: return kHypothesis;
    case ErrorCode::NotFound:
    case ErrorCode::RetryExhausted:
    case ErrorCode::IterationOverflow:
    case ErrorCode::InsertionFailed:
    case ErrorCode::Infeasible: return kExhausted;
    case ErrorCode::UsageError:
    case ErrorCode::ParseError: return kUsage;
  }
  return kUsage;
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void emit(const Globals& gl, Fn fn) {
  if (gl.out.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream f(gl.out);
  if (!f) fail(ErrorCode::UsageError, "cannot write '" + gl.out + "'");
  fn(f);
}

bool file_is_directed(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::NotFound, "cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line.find("directed") != std::string::npos;
  }
  return false;
}

// Experiment profile unless a --params file overrides it.
QuasirandomParams params_for(const Globals& gl, int n, std::size_t m) {
  const double pairs = n > 1 ? n * (n - 1) / 2.0 : 1.0;
  const double density = std::clamp(m / pairs, 0.01, 0.99);
  auto q = QuasirandomParams::for_density(density);
  q.eta = 0.5;
  if (!gl.params_file.empty()) q = load_params(gl.params_file, q);
  q.validate();
  return q;
}

HamiltonConfig hamilton_cfg(const QuasirandomParams& q) {
  HamiltonConfig h;
  h.restarts = q.retry_budget;
  h.backtrack_depth = q.backtrack_depth;
  return h;
}

CycleDecompConfig cycle_cfg(const QuasirandomParams& q) {
  CycleDecompConfig c;
  c.hamilton = hamilton_cfg(q);
  c.orientation.retry_budget = q.retry_budget;
  return c;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << "ok " << (r.ok ? "true" : "false") << '\n'
      << "kind " << r.kind << '\n'
      << "expected_count " << r.expected_count << '\n'
      << "actual_count " << r.actual_count << '\n'
      << "bound_rule " << r.bound_rule << '\n'
      << "violations " << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "violation " << v.invariant << ": " << v.witness << '\n';
}

// Summary of a constructive verb; goes to stderr so --out files stay pure.
int finish(const VerificationReport& r, const std::string& what) {
  std::cerr << what << ": " << r.actual_count << " parts, bound " << r.expected_count << " (" << r.bound_rule << ")"
            << (r.ok ? ", verified" : ", VERIFICATION FAILED") << '\n';
  if (!r.ok) {
    for (const auto& v : r.violations) std::cerr << "  " << v.invariant << ": " << v.witness << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

template <class T>
std::string fmt(T x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasirandom graph decompositions: cycles, paths, linear forests, edge colourings."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--seed", gl.seed, "Random seed")->default_val(1);
  app.add_option("--params", gl.params_file, "Parameter profile (key value lines)");
  app.add_option("--out", gl.out, "Output file (stdout when absent)");

  std::string in_path;
  auto with_input = [&](CLI::App* sub) { sub->add_option("--in", in_path, "Input edge list")->required(); };

  int gen_n = 0;
  double gen_p = 0.5;
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) as an edge list");
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--p", gen_p)->required();

  std::optional<double> diag_p, diag_eps;
  bool diag_exact = false;
  int diag_samples = 2000;
  auto* diag = app.add_subcommand("diag", "Degree and quasirandomness diagnostics");
  with_input(diag);
  diag->add_option("--p", diag_p, "Density for the lower-regularity check");
  diag->add_option("--eps", diag_eps, "Slack for the lower-regularity check");
  diag->add_flag("--exact", diag_exact, "Exhaustive checks (n <= 18)");
  diag->add_option("--samples", diag_samples, "Sampled sets for the regularity check")->default_val(2000);

  std::string pairs_path;
  auto* cycles = app.add_subcommand("cycles", "Cycle decomposition (plus odd-vertex matching when not Eulerian)");
  with_input(cycles);
  cycles->add_option("--matching", pairs_path, "Vertex pairs the cycles must respect");

  auto* paths = app.add_subcommand("paths", "Path decomposition");
  with_input(paths);
  auto* forests = app.add_subcommand("forests", "Linear forest decomposition");
  with_input(forests);
  auto* arbor = app.add_subcommand("arboricity", "Linear forests of a dense regular graph");
  with_input(arbor);
  auto* color = app.add_subcommand("color", "Edge colouring with Delta colours where possible");
  with_input(color);
  auto* hamdec = app.add_subcommand("hamdec", "Hamilton decomposition of a regular (di)graph");
  with_input(hamdec);
  auto* orient = app.add_subcommand("orient", "Balanced orientation of an Eulerian graph");
  with_input(orient);

  std::string v_decomp, v_coloring, v_orientation, v_cycles;
  bool v_spanning = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition, colouring or orientation");
  with_input(verify_cmd);
  auto* vg = verify_cmd->add_option_group("artifact");
  vg->add_option("--decomp", v_decomp, "Decomposition file");
  vg->add_option("--coloring", v_coloring, "Colouring file (u v c lines)");
  vg->add_option("--orientation", v_orientation, "Directed edge list");
  vg->add_option("--cycles", v_cycles, "Cycle list, one per line");
  vg->require_option(1);
  verify_cmd->add_flag("--spanning", v_spanning, "Every cycle must be Hamiltonian");

  std::vector<int> sw_n{30, 60, 100};
  std::vector<double> sw_p{0.3, 0.5, 0.7};
  std::vector<std::string> sw_tasks{"cycles", "paths", "forests", "color"};
  int sw_seeds = 20, sw_threads = 1;
  bool sw_timings = false;
  std::string sw_csv;
  auto* sweep = app.add_subcommand("sweep", "G(n,p) experiment over sizes, densities and seeds");
  sweep->add_option("--n", sw_n)->delimiter(',');
  sweep->add_option("--p", sw_p)->delimiter(',');
  sweep->add_option("--seeds", sw_seeds, "Seeds per cell, starting at --seed")->default_val(20);
  sweep->add_option("--tasks", sw_tasks)->delimiter(',');
  sweep->add_option("--threads", sw_threads)->default_val(1);
  sweep->add_flag("--timings", sw_timings, "Include wall times (output no longer reproducible)");
  sweep->add_option("--csv", sw_csv, "Per-run rows as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    Rng rng(gl.seed);
    if (*gen) {
      const Graph g = gen_gnp(gen_n, gen_p, gl.seed);
      emit(gl, [&](std::ostream& o) { write_graph(o, g); });
      return kOk;
    }

    if (*sweep) {
      SweepConfig cfg;
      cfg.ns = sw_n;
      cfg.ps = sw_p;
      for (int i = 0; i < sw_seeds; ++i) cfg.seeds.push_back(gl.seed + i);
      cfg.tasks.clear();
      for (const auto& t : sw_tasks) cfg.tasks.push_back(parse_task(t));
      if (!gl.params_file.empty()) cfg.profile = load_params(gl.params_file);
      cfg.threads = sw_threads > 0 ? sw_threads : static_cast<int>(std::thread::hardware_concurrency());
      const auto rows = experiment_sweep(cfg);
      emit(gl, [&](std::ostream& o) { write_sweep_table(o, summarize(rows), sw_timings); });
      if (!sw_csv.empty()) {
        std::ofstream f(sw_csv);
        if (!f) fail(ErrorCode::UsageError, "cannot write '" + sw_csv + "'");
        write_sweep_csv(f, rows, sw_timings);
      }
      return kOk;
    }

    const bool directed = file_is_directed(in_path);
    if (directed && !*cycles && !*hamdec)
      fail(ErrorCode::UsageError, "this verb takes an undirected edge list");

    if (*hamdec && directed) {
      const Digraph d = load_digraph(in_path);
      const auto q = params_for(gl, d.vertex_count(), d.arc_count() / 2);
      const auto parts = hamilton_decompose_digraph(d, rng, hamilton_cfg(q));
      emit(gl, [&](std::ostream& o) { write_cycle_lines(o, parts); });
      VerifyOptions opt;
      opt.spanning_cycles = true;
      return finish(verify_dicycles(d, parts, opt), "hamdec");
    }
    if (*cycles && directed) {
      const Digraph d = load_digraph(in_path);
      const auto q = params_for(gl, d.vertex_count(), d.arc_count() / 2);
      const PairList m = pairs_path.empty() ? PairList{} : load_pairs(pairs_path);
      const auto parts = decompose_cycles_directed(d, m, q, rng, cycle_cfg(q));
      emit(gl, [&](std::ostream& o) { write_decomposition(o, make_cycle_set(d.vertex_count(), parts)); });
      return finish(verify_dicycles(d, parts), "cycles");
    }

    const Graph g = load_graph(in_path);
    const int n = g.vertex_count();
    const auto q = params_for(gl, n, g.edge_count());

    if (*diag) {
      const auto dg = gnp_diagnostics(g);
      const double p = diag_p.value_or(q.p), eps = diag_eps.value_or(q.eps);
      const bool exact = diag_exact && n <= kExactCheckLimit;
      const auto reg = lower_regularity_check(g, p, eps, exact ? CheckMode::Exact : CheckMode::Sampled, diag_samples,
                                              derive_seed(gl.seed, 1));
      emit(gl, [&](std::ostream& o) {
        o << "n " << n << "\nm " << g.edge_count() << "\nmax_degree " << dg.max_degree << "\nmin_degree "
          << dg.min_degree << "\nspread " << dg.max_degree - dg.min_degree << "\nspread_bound " << fmt(dg.spread_bound)
          << "\nspread_ok " << dg.spread_ok << "\neta_n " << fmt(q.eta * n) << "\nspread_within_eta "
          << (dg.max_degree - dg.min_degree <= q.eta * n) << "\nunique_max " << dg.unique_max << "\nodd_count "
          << dg.odd_count << "\nodd_fraction " << fmt(dg.odd_fraction) << "\neulerian " << is_eulerian(g)
          << "\nregular " << is_regular(g) << "\nregularity_p " << fmt(p) << "\nregularity_eps " << fmt(eps)
          << "\nregularity_mode " << (exact ? "exact" : "sampled") << "\nlower_regular " << reg.regular << '\n';
        if (!reg.regular)
          o << "witness_S " << reg.S.size() << "\nwitness_T " << reg.T.size() << "\nwitness_edges " << reg.edges_between
            << '\n';
        if (n <= kExactCheckLimit && diag_exact) {
          const auto ex = robust_expander_check(g, q.nu, q.tau);
          o << "robust_expander " << ex.expander << '\n';
          if (!ex.expander) o << "expander_witness_S " << ex.S.size() << '\n';
        } else {
          o << "robust_expander skipped\n";
        }
        o << "colour_criterion " << (n % 2 == 0 && n > 0 ? to_string(overfull_criterion(g)) : "n/a") << '\n';
      });
      return kOk;
    }

    if (*cycles) {
      const PairList m = pairs_path.empty() ? PairList{} : load_pairs(pairs_path);
      Decomposition dec;
      if (is_eulerian(g)) {
        dec = make_cycle_set(n, decompose_cycles_undirected(g, m, q, rng, cycle_cfg(q)));
      } else {
        if (!m.pairs().empty()) fail(ErrorCode::UsageError, "--matching needs an Eulerian input");
        auto res = decompose_cycles_plus_matching(g, q, rng, cycle_cfg(q));
        dec = make_cycle_set(n, res.cycles, res.matching);
      }
      emit(gl, [&](std::ostream& o) { write_decomposition(o, dec); });
      return finish(verify(g, dec), "cycles");
    }
    if (*paths) {
      const auto dec = make_path_set(n, decompose_paths(g, q, rng, cycle_cfg(q)));
      emit(gl, [&](std::ostream& o) { write_decomposition(o, dec); });
      return finish(verify(g, dec), "paths");
    }
    if (*forests) {
      const auto dec = make_forest_set(n, decompose_linear_forests(g, q, rng, cycle_cfg(q)));
      emit(gl, [&](std::ostream& o) { write_decomposition(o, dec); });
      return finish(verify(g, dec), "forests");
    }
    if (*arbor) {
      const auto dec = make_forest_set(n, arboricity_regular_large(g, rng, hamilton_cfg(q)));
      emit(gl, [&](std::ostream& o) { write_decomposition(o, dec); });
      int spanning = 0;
      for (const auto& f : dec.parts) spanning += f.size() == 1 && static_cast<int>(f[0].size()) == n;
      std::cerr << "arboricity: " << spanning << " of " << dec.parts.size() << " forests are spanning paths\n";
      return finish(verify(g, dec), "arboricity");
    }
    if (*color) {
      ColoringConfig cc;
      cc.hamilton = hamilton_cfg(q);
      const auto rep = color_edges(g, q, rng, cc);
      emit(gl, [&](std::ostream& o) { write_coloring(o, rep.coloring); });
      const auto dg = gnp_diagnostics(g);
      const bool trusted = dg.max_degree - dg.min_degree <= q.eta * n;
      std::cerr << "delta " << rep.delta << "\ncolors " << rep.coloring.colors << "\nroute " << to_string(rep.route)
                << "\ncriterion " << (rep.criterion ? to_string(*rep.criterion) : "n/a") << "\ncriterion_trusted "
                << (trusted ? "yes" : "no") << "\noptimal " << (rep.optimal ? "certified" : "unknown") << '\n';
      if (!rep.construction_error.empty()) std::cerr << "construction_note " << rep.construction_error << '\n';
      const int code = finish(verify(g, make_coloring(n, rep.coloring.color)), "color");
      if (code != kOk) return code;
      return rep.coloring.colors <= rep.delta ? kOk : kDeltaPlusOne;
    }
    if (*hamdec) {
      const auto parts = hamilton_decompose(g, rng, hamilton_cfg(q));
      emit(gl, [&](std::ostream& o) { write_cycle_lines(o, parts); });
      VerifyOptions opt;
      opt.spanning_cycles = true;
      return finish(verify(g, make_cycle_set(n, parts), opt), "hamdec");
    }
    if (*orient) {
      OrientationConfig oc;
      oc.retry_budget = q.retry_budget;
      const Digraph d = eulerian_orientation_quasirandom(g, oc, rng);
      emit(gl, [&](std::ostream& o) { write_digraph(o, d); });
      return finish(verify_orientation(g, d), "orient");
    }
    if (*verify_cmd) {
      VerifyOptions opt;
      opt.spanning_cycles = v_spanning;
      VerificationReport r;
      if (!v_decomp.empty()) r = verify(g, load_decomposition(v_decomp), opt);
      else if (!v_coloring.empty()) r = verify(g, coloring_decomposition(n, load_coloring(v_coloring)), opt);
      else if (!v_orientation.empty()) r = verify_orientation(g, load_digraph(v_orientation), opt);
      else r = verify(g, make_cycle_set(n, load_cycle_lines(v_cycles)), opt);
      emit(gl, [&](std::ostream& o) { print_report(o, r); });
      return r.ok ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
