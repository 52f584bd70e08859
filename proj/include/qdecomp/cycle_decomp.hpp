#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "qdecomp/errors.hpp"
#include "qdecomp/cycle_classes.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/hamilton.hpp"
#include "qdecomp/hamilton_decomp.hpp"
#include "qdecomp/orient.hpp"
#include "qdecomp/randgen.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

using CycleSet = std::vector<std::vector<int>>;

enum class UndirectedRoute { Direct, ViaOrientation };

/// How the vertex set of each peeled cycle is chosen, beyond the max-degree
/// vertices it must contain.
///   AlternatingSides: one side of a fixed random split, alternating per step.
///   TopDegree: whole matching units of highest current degree, as few as the
///   Hamilton search needs. Keeps the regular remainder dense when the degree
///   spread is a large fraction of the maximum degree.
enum class PeelPolicy { TopDegree, AlternatingSides };

struct CycleDecompConfig {
  HamiltonConfig hamilton;
  OrientationConfig orientation;
  UndirectedRoute route = UndirectedRoute::Direct;
  PeelPolicy policy = PeelPolicy::TopDegree;
  int restarts = 5;  // full reruns with a fresh split after a failed search
  int pairing_redraws = 3;  // path decompositions only
};

struct CyclesPlusMatching {
  CycleSet cycles;
  std::vector<Edge> matching;
};

namespace detail {

inline std::vector<int> total_degrees(const Graph& g) { return degree_vector(g); }

inline std::vector<int> total_degrees(const Digraph& d) {
  std::vector<int> deg(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) deg[v] = d.out_degree(v) + d.in_degree(v);
  return deg;
}

inline void remove_cycle(Graph& g, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) g.remove_edge(c[i], c[(i + 1) % c.size()]);
}

inline void remove_cycle(Digraph& d, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) d.remove_arc(c[i], c[(i + 1) % c.size()]);
}

inline CycleSet decompose_regular(const Graph& g, Rng& rng, const HamiltonConfig& cfg) {
  return hamilton_decompose(g, rng, cfg);
}

inline CycleSet decompose_regular(const Digraph& d, Rng& rng, const HamiltonConfig& cfg) {
  return hamilton_decompose_digraph(d, rng, cfg);
}

// Fallback when the regular remainder resists on its own: its factors join the
// peeled cycles as classes and label switches merge everything. Supports stay
// fixed, so each cycle keeps the vertex set it was peeled with.
inline std::optional<CycleSet> merge_with_peeled(const Graph& rest, const CycleSet& peeled, Rng& rng,
                                                 const HamiltonConfig& cfg) {
  std::vector<std::vector<std::vector<int>>> classes;
  for (const auto& c : peeled) classes.push_back({c});
  for (auto& f : two_factorization(rest)) classes.push_back(std::move(f));
  CycleClassSystem sys(rest.vertex_count(), classes);
  if (!sys.merge(rng, static_cast<long long>(cfg.merge_moves_per_vertex) * rest.vertex_count())) return std::nullopt;
  CycleSet out;
  for (int i = 0; i < sys.class_count(); ++i) out.push_back(sys.cycles(i).front());
  return out;
}

inline std::optional<CycleSet> merge_with_peeled(const Digraph& rest, const CycleSet& peeled, Rng& rng,
                                                 const HamiltonConfig& cfg) {
  std::vector<std::vector<std::vector<int>>> classes;
  for (int fix = 0; fix < 40; ++fix) {
    classes.clear();
    for (const auto& c : peeled) classes.push_back({c});
    for (auto& f : one_factorization(rest, rng)) classes.push_back(std::move(f));
    if (switch_parity_ok(classes)) break;
  }
  if (!switch_parity_ok(classes)) return std::nullopt;
  DiCycleClassSystem sys(rest.vertex_count(), classes);
  if (!sys.merge(rng, static_cast<long long>(cfg.merge_moves_per_vertex) * rest.vertex_count())) return std::nullopt;
  CycleSet out;
  for (int i = 0; i < sys.class_count(); ++i) out.push_back(sys.cycles(i).front());
  return out;
}

template <class G>
void check_cycle_hypotheses(const G& g, const QuasirandomParams& params) {
  params.validate();
  if (!is_eulerian(g)) fail(ErrorCode::HypothesisViolated, "input is not Eulerian");
  const auto deg = total_degrees(g);
  const int n = g.vertex_count();
  const int spread = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end()) - *std::min_element(deg.begin(), deg.end());
  if (spread > params.eta * n + 1e-9)
    fail(ErrorCode::HypothesisViolated,
         "degree spread " + std::to_string(spread) + " exceeds eta*n = " + std::to_string(params.eta * n));
}

// Host-id Hamilton cycle of work[verts], if the search finds one.
template <class G>
std::optional<std::vector<int>> cycle_on(const G& work, const std::vector<int>& verts, Rng& rng, int restarts) {
  // Two-vertex directed cycles are left to the regular remainder.
  if (verts.size() < 3) return std::nullopt;
  const auto sub = induced_subgraph(work, verts);
  auto local = try_hamilton_cycle(sub.graph, rng, restarts);
  if (!local) return std::nullopt;
  for (int& v : *local) v = sub.to_host[v];
  return local;
}

// Grows the cycle's vertex set from the max-degree vertices by whole matching
// units in order of current degree until a Hamilton search succeeds. Units
// that would drop below floor_deg are never used.
template <class G>
std::optional<std::vector<int>> top_degree_cycle(const G& work, const std::vector<int>& deg, int top, int floor_deg,
                                                 const std::vector<int>& partner, Rng& rng, int restarts) {
  const int n = work.vertex_count();
  std::vector<char> on(n, 0);
  for (int v = 0; v < n; ++v) on[v] = deg[v] == top;
  struct Unit {
    int a, b, weight;
  };
  std::vector<Unit> units;
  for (int v = 0; v < n; ++v) {
    const int w = partner[v];
    if (w >= 0 && w < v) continue;
    if (on[v] || (w >= 0 && on[w])) continue;
    const int weight = w < 0 ? deg[v] : std::min(deg[v], deg[w]);
    if (weight > 0 && weight - 2 >= floor_deg) units.push_back({v, w, weight});
  }
  shuffle(units, rng);
  std::stable_sort(units.begin(), units.end(), [](const Unit& x, const Unit& y) { return x.weight > y.weight; });
  std::vector<int> verts;
  for (int v = 0; v < n; ++v)
    if (on[v]) verts.push_back(v);
  // One unit at a time: every vertex taken early falls behind the others.
  std::size_t used = 0;
  for (;;) {
    if (auto c = cycle_on(work, verts, rng, restarts)) return c;
    if (used == units.size()) return std::nullopt;
    verts.push_back(units[used].a);
    if (units[used].b >= 0) verts.push_back(units[used].b);
    ++used;
    std::sort(verts.begin(), verts.end());
  }
}

// One run of the max-degree peeling loop. Returns false when a Hamilton
// search gives up, so the caller can redraw.
template <class G>
bool peel_and_decompose(const G& g, const PairList& m, const QuasirandomParams& params, Rng& rng,
                        const CycleDecompConfig& cfg, CycleSet& out) {
  const int n = g.vertex_count();
  const auto deg0 = total_degrees(g);
  const int max0 = *std::max_element(deg0.begin(), deg0.end());
  const int min0 = *std::min_element(deg0.begin(), deg0.end());
  out.clear();
  G work = g;
  if (max0 != min0) {
    std::vector<int> sides[2];
    if (cfg.policy == PeelPolicy::AlternatingSides) {
      const SplitPartition part = split_partition(g, m, params.alpha, rng, params.retry_budget);
      for (int v = 0; v < n; ++v) sides[part.in_s[v] ? 0 : 1].push_back(v);
    }
    const auto partner = m.partner_map(n);
    const double max_steps = 2 * params.eta * n;
    for (int i = 1;; ++i) {
      const auto deg = total_degrees(work);
      const int top = *std::max_element(deg.begin(), deg.end());
      if (top == *std::min_element(deg.begin(), deg.end())) break;
      if (i > max_steps + 1e-9)
        fail(ErrorCode::IterationOverflow, "more than 2*eta*n extractions; input outside the regime");
      if (top != max0 - 2 * (i - 1))
        fail(ErrorCode::HypothesisViolated, "maximum degree did not drop by two per extraction");
      std::optional<std::vector<int>> cyc;
      if (cfg.policy == PeelPolicy::AlternatingSides) {
        std::vector<char> on(n, 0);
        for (int v : sides[(i - 1) % 2]) on[v] = 1;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
          if (on[v] || deg[v] == top) verts.push_back(v);
        cyc = cycle_on(work, verts, rng, cfg.hamilton.restarts);
      } else {
        cyc = top_degree_cycle(work, deg, top, min0 - (i + 1), partner, rng, std::max(1, cfg.hamilton.restarts / 20));
      }
      if (!cyc) return false;
      remove_cycle(work, *cyc);
      out.push_back(std::move(*cyc));
      const auto after = total_degrees(work);
      if (*std::min_element(after.begin(), after.end()) < min0 - (i + 1))
        fail(ErrorCode::HypothesisViolated, "minimum degree fell faster than the peeling bound");
    }
  }
  try {
    for (auto& c : decompose_regular(work, rng, cfg.hamilton)) out.push_back(std::move(c));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    auto merged = merge_with_peeled(work, out, rng, cfg.hamilton);
    if (!merged || !cycles_decompose(g, *merged)) return false;
    out = std::move(*merged);
  }
  if (static_cast<int>(out.size()) != max0 / 2)
    fail(ErrorCode::HypothesisViolated, "cycle count differs from half the maximum degree");
  return true;
}

template <class G>
CycleSet decompose_cycles_loop(const G& g, const PairList& m, const QuasirandomParams& params, Rng& rng,
                               const CycleDecompConfig& cfg) {
  check_cycle_hypotheses(g, params);
  m.validate(g.vertex_count());
  const auto deg = total_degrees(g);
  if (g.vertex_count() == 0 || *std::max_element(deg.begin(), deg.end()) == 0) return {};
  const PairList ordered = PairList::ordered_by(m.pairs(), deg);
  CycleSet out;
  for (int attempt = 0; attempt < std::max(1, cfg.restarts); ++attempt)
    if (peel_and_decompose(g, ordered, params, rng, cfg, out)) return out;
  fail(ErrorCode::NotFound, "Hamilton searches failed in every rerun");
}

}  // namespace detail

/// Eulerian digraph into Delta/2 directed cycles (Delta counts in + out),
/// consistent with M: a cycle through the lower-degree end of a pair also
/// passes through the other end.
inline CycleSet decompose_cycles_directed(const Digraph& d, const PairList& m, const QuasirandomParams& params,
                                          Rng& rng, const CycleDecompConfig& cfg = {}) {
  return detail::decompose_cycles_loop(d, m, params, rng, cfg);
}

/// Undirected version. Direct runs the same loop on the graph itself;
/// ViaOrientation orients first and forgets directions afterwards.
inline CycleSet decompose_cycles_undirected(const Graph& g, const PairList& m, const QuasirandomParams& params,
                                            Rng& rng, const CycleDecompConfig& cfg = {}) {
  if (cfg.route == UndirectedRoute::Direct) return detail::decompose_cycles_loop(g, m, params, rng, cfg);
  detail::check_cycle_hypotheses(g, params);
  return decompose_cycles_directed(eulerian_orientation_quasirandom(g, cfg.orientation, rng), m, params, rng, cfg);
}

/// Perfect matching on the odd-degree vertices, then floor(Delta/2) cycles on
/// what is left.
inline CyclesPlusMatching decompose_cycles_plus_matching(const Graph& g, const QuasirandomParams& params, Rng& rng,
                                                         const CycleDecompConfig& cfg = {}) {
  params.validate();
  const int n = g.vertex_count();
  if (n == 0) return {};
  const auto prof = degree_profile(g);
  const auto odd = induced_subgraph(g, prof.odd_set);
  for (int attempt = 0; attempt < params.retry_budget; ++attempt) {
    std::vector<Edge> matching;
    if (!prof.odd_set.empty()) {
      for (const Edge& e : perfect_matching_even_set(odd.graph, rng, cfg.hamilton))
        matching.emplace_back(odd.to_host[e.u], odd.to_host[e.v]);
    }
    const Graph rest = remove_edges(g, matching);
    if (rest.max_degree() != 2 * (prof.max_degree / 2)) continue;
    return {decompose_cycles_undirected(rest, PairList{}, params, rng, cfg), std::move(matching)};
  }
  fail(ErrorCode::HypothesisViolated, "no odd-vertex matching kept the maximum degree even");
}

}  // namespace qdecomp
