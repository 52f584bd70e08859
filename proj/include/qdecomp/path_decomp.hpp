#pragma once

#include <algorithm>
#include <vector>

#include "qdecomp/cycle_decomp.hpp"
#include "qdecomp/decomposition.hpp"
#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/hamilton_decomp.hpp"
#include "qdecomp/matching.hpp"
#include "qdecomp/orient.hpp"
#include "qdecomp/randgen.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

using PathSet = std::vector<VertexSequence>;
using LinearForestSet = std::vector<Part>;

/// Odd-degree vertices paired up. Pairs in w_pairs get routed through the
/// auxiliary vertex; the others are split by whether they are edges of G.
/// Every pair is stored with the lower-degree end first.
struct OddPairing {
  PairList pairs;
  std::vector<std::pair<int, int>> e_star;  // pairs that are edges of G
  std::vector<std::pair<int, int>> e_circ;  // pairs that are non-edges
  std::vector<std::pair<int, int>> w_pairs;
};

/// WithPairs: odd(G) >= Delta. UniqueMaxEven: odd < Delta, unique maximum
/// vertex, Delta even. General: every other input.
enum class PathCase { WithPairs, UniqueMaxEven, General };

inline PathCase path_case(const Graph& g) {
  const auto prof = degree_profile(g);
  if (prof.odd_count >= prof.max_degree) return PathCase::WithPairs;
  if (prof.max_degree % 2 == 0 && prof.max_degree_vertices.size() == 1) return PathCase::UniqueMaxEven;
  return PathCase::General;
}

/// Number of paths the construction produces for g.
inline int path_count_bound(const Graph& g) {
  const auto prof = degree_profile(g);
  switch (path_case(g)) {
    case PathCase::WithPairs: return prof.odd_count / 2;
    case PathCase::UniqueMaxEven: return prof.max_degree / 2;
    case PathCase::General: return (prof.max_degree + 2) / 2;
  }
  return 0;
}

/// Number of linear forests the construction produces for g.
inline int forest_count_bound(const Graph& g) {
  const auto prof = degree_profile(g);
  switch (path_case(g)) {
    case PathCase::WithPairs: return (prof.max_degree + 1) / 2;
    case PathCase::UniqueMaxEven: return prof.max_degree / 2;
    case PathCase::General: return (prof.max_degree + 2) / 2;
  }
  return 0;
}

inline OddPairing pair_odd_vertices(const Graph& g, Rng& rng) {
  const auto prof = degree_profile(g);
  const auto deg = degree_vector(g);
  std::vector<int> odd = prof.odd_set;
  shuffle(odd, rng);
  std::vector<std::pair<int, int>> raw;
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) raw.emplace_back(odd[i], odd[i + 1]);
  OddPairing out{PairList::ordered_by(raw, deg), {}, {}, {}};
  std::size_t routed = 0;
  if (prof.odd_count > 0 && prof.odd_count >= prof.max_degree) routed = (prof.max_degree + 1) / 2;
  for (std::size_t i = 0; i < out.pairs.pairs().size(); ++i) {
    const auto pr = out.pairs.pairs()[i];
    if (i < routed) out.w_pairs.push_back(pr);
    else if (g.has_edge(pr.first, pr.second)) out.e_star.push_back(pr);
    else out.e_circ.push_back(pr);
  }
  return out;
}

namespace detail {

// Path left after deleting vertex w from a cycle through it.
inline VertexSequence open_at(const std::vector<int>& cycle, int w) {
  auto it = std::find(cycle.begin(), cycle.end(), w);
  require(it != cycle.end(), "cycle misses the auxiliary vertex");
  VertexSequence out(it + 1, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

// Maximal runs of kept edges along an open sequence, as vertex sequences.
template <class Keep>
std::vector<VertexSequence> split_open(const VertexSequence& seq, Keep keep) {
  std::vector<VertexSequence> out;
  VertexSequence run;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (keep(seq[i], seq[i + 1])) {
      if (run.empty()) run.push_back(seq[i]);
      run.push_back(seq[i + 1]);
    } else if (!run.empty()) {
      out.push_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) out.push_back(std::move(run));
  return out;
}

// Same for a closed sequence with at least one dropped edge.
template <class Keep>
std::vector<VertexSequence> split_closed(const VertexSequence& cyc, Keep keep) {
  const std::size_t m = cyc.size();
  std::size_t cut = m;
  for (std::size_t i = 0; i < m; ++i)
    if (!keep(cyc[i], cyc[(i + 1) % m])) {
      cut = i;
      break;
    }
  require(cut < m, "closed sequence has no dropped edge");
  VertexSequence seq;
  for (std::size_t k = 1; k <= m; ++k) seq.push_back(cyc[(cut + k) % m]);
  return split_open(seq, keep);
}

inline QuasirandomParams relaxed_for(const QuasirandomParams& params, int spread, int n) {
  // Outside the regime the construction still runs; the count is then best effort.
  QuasirandomParams q = params;
  if (n > 0) q.eta = std::min(1.0, std::max(q.eta, static_cast<double>(spread) / n));
  return q;
}

inline int spread_of(const std::vector<int>& deg) {
  if (deg.empty()) return 0;
  return *std::max_element(deg.begin(), deg.end()) - *std::min_element(deg.begin(), deg.end());
}

inline std::vector<int> total_degrees_of(const Digraph& d) {
  std::vector<int> deg(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) deg[v] = d.out_degree(v) + d.in_degree(v);
  return deg;
}

// Paths through the auxiliary vertex w = n for the odd >= Delta case.
inline PathSet routed_paths(const Graph& g, const OddPairing& pairing, const QuasirandomParams& params, Rng& rng,
                            const CycleDecompConfig& cfg) {
  const int n = g.vertex_count();
  Graph aux(n + 1);
  for (const Edge& e : g.edges()) aux.add_edge(e.u, e.v);
  for (auto [a, b] : pairing.w_pairs) {
    aux.add_edge(a, n);
    aux.add_edge(b, n);
  }
  for (auto [a, b] : pairing.e_star) aux.remove_edge(a, b);
  for (auto [a, b] : pairing.e_circ) aux.add_edge(a, b);
  const auto q = relaxed_for(params, spread_of(degree_vector(aux)), n + 1);
  PathSet out;
  for (const auto& c : decompose_cycles_undirected(aux, PairList(pairing.e_star), q, rng, cfg))
    out.push_back(open_at(c, n));
  return out;
}

// Paths from the oriented auxiliary digraph when odd < Delta.
inline PathSet oriented_paths(const Graph& g, const OddPairing& pairing, PathCase which,
                              const QuasirandomParams& params, Rng& rng, const CycleDecompConfig& cfg) {
  const int n = g.vertex_count();
  const auto prof = degree_profile(g);
  Graph base = g;
  for (auto [a, b] : pairing.e_star) base.remove_edge(a, b);
  for (auto [a, b] : pairing.e_circ) base.add_edge(a, b);
  const Digraph oriented = eulerian_orientation_quasirandom(base, cfg.orientation, rng);
  const int w = n;
  Digraph aux(n + 1);
  for (const Arc& a : oriented.arcs()) aux.add_arc(a.from, a.to);
  for (auto [a, b] : pairing.pairs.pairs()) {
    if (aux.has_arc(a, b)) {
      aux.remove_arc(a, b);
      aux.add_arc(a, w);
      aux.add_arc(w, b);
    } else if (aux.has_arc(b, a)) {
      aux.remove_arc(b, a);
      aux.add_arc(b, w);
      aux.add_arc(w, a);
    } else {
      aux.add_arc(a, b);
      aux.add_arc(b, w);
      aux.add_arc(w, a);
    }
  }
  // Anchors get an antiparallel pair of arcs to w.
  std::vector<char> odd(n, 0);
  for (int v : prof.odd_set) odd[v] = 1;
  std::vector<int> eligible;
  for (int v = 0; v < n; ++v)
    if (!odd[v] && (which == PathCase::General || g.degree(v) < prof.max_degree)) eligible.push_back(v);
  const int need = which == PathCase::UniqueMaxEven ? (prof.max_degree - prof.odd_count) / 2
                                                     : (prof.max_degree + 2 - prof.odd_count) / 2;
  if (static_cast<int>(eligible.size()) < need)
    fail(ErrorCode::InsufficientAnchors, "need " + std::to_string(need) + " anchor vertices, have " +
                                             std::to_string(eligible.size()));
  shuffle(eligible, rng);
  for (int i = 0; i < need; ++i) {
    aux.add_arc(w, eligible[i]);
    aux.add_arc(eligible[i], w);
  }
  const auto q = relaxed_for(params, spread_of(total_degrees_of(aux)), n + 1);
  PathSet out;
  for (const auto& c : decompose_cycles_directed(aux, PairList{}, q, rng, cfg)) out.push_back(open_at(c, w));
  return out;
}

// Any pairing of the odd vertices works; a fresh one is drawn when the cycle
// search on the auxiliary graph comes back empty.
template <class Build>
auto with_pairings(const Graph& g, Rng& rng, int attempts, Build build) {
  for (int a = 1;; ++a) {
    try {
      return build(pair_odd_vertices(g, rng));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFound || a >= attempts) throw;
    }
  }
}

}  // namespace detail

/// Path decomposition into max{odd/2, ceil(Delta/2)} paths when G has a unique
/// maximum-degree vertex (or odd >= Delta), max{odd/2, ceil((Delta+1)/2)}
/// otherwise.
inline PathSet decompose_paths(const Graph& g, const QuasirandomParams& params, Rng& rng,
                               const CycleDecompConfig& cfg = {}) {
  params.validate();
  if (g.edge_count() == 0) return {};
  return detail::with_pairings(g, rng, cfg.pairing_redraws, [&](const OddPairing& pairing) {
    const PathCase which = path_case(g);
    if (which != PathCase::WithPairs) return detail::oriented_paths(g, pairing, which, params, rng, cfg);
    std::vector<char> circ(static_cast<std::size_t>(g.vertex_count()) * g.vertex_count(), 0);
    const int n = g.vertex_count();
    for (auto [a, b] : pairing.e_circ) circ[static_cast<std::size_t>(a) * n + b] = circ[static_cast<std::size_t>(b) * n + a] = 1;
    auto keep = [&](int a, int b) { return !circ[static_cast<std::size_t>(a) * n + b]; };
    PathSet out;
    for (const auto& p : detail::routed_paths(g, pairing, params, rng, cfg))
      for (auto& piece : detail::split_open(p, keep)) out.push_back(std::move(piece));
    for (auto [a, b] : pairing.e_star) out.push_back({a, b});
    return out;
  });
}

/// Linear forests: ceil(Delta/2) with a unique maximum vertex or odd >= Delta,
/// ceil((Delta+1)/2) otherwise.
inline LinearForestSet decompose_linear_forests(const Graph& g, const QuasirandomParams& params, Rng& rng,
                                                const CycleDecompConfig& cfg = {}) {
  params.validate();
  if (g.edge_count() == 0) return {};
  return detail::with_pairings(g, rng, cfg.pairing_redraws, [&](const OddPairing& pairing) {
    const PathCase which = path_case(g);
    LinearForestSet out;
    if (which != PathCase::WithPairs) {
      for (auto& p : detail::oriented_paths(g, pairing, which, params, rng, cfg)) out.push_back({std::move(p)});
      return out;
    }
    const int n = g.vertex_count();
    std::vector<char> circ(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : pairing.e_circ) circ[static_cast<std::size_t>(a) * n + b] = circ[static_cast<std::size_t>(b) * n + a] = 1;
    auto keep = [&](int a, int b) { return !circ[static_cast<std::size_t>(a) * n + b]; };
    std::vector<std::vector<char>> present;
    for (const auto& p : detail::routed_paths(g, pairing, params, rng, cfg)) {
      out.push_back(detail::split_open(p, keep));
      std::vector<char> on(n, 0);
      for (const auto& piece : out.back())
        for (int v : piece) on[v] = 1;
      present.push_back(std::move(on));
    }
    // Each removed edge goes into the first forest that touches neither end.
    for (auto [a, b] : pairing.e_star) {
      std::size_t f = 0;
      while (f < out.size() && (present[f][a] || present[f][b])) ++f;
      if (f == out.size())
        fail(ErrorCode::InsertionFailed, "no forest avoids both ends of " + std::to_string(a) + "-" + std::to_string(b));
      out[f].push_back({a, b});
      present[f][a] = present[f][b] = 1;
    }
    return out;
  });
}

/// At least t vertices covered by a matching of the complement; exactly
/// ceil(t/2) edges are returned.
inline std::vector<Edge> complement_matching_cover(const Graph& g, int t) {
  require(t >= 0, "negative cover target");
  auto edges = matching_edges(maximum_matching(complement(g)));
  const std::size_t want = static_cast<std::size_t>((t + 1) / 2);
  if (edges.size() < want || 2 * static_cast<int>(edges.size()) < t)
    fail(ErrorCode::MatchingDeficient, "complement matching covers " + std::to_string(2 * edges.size()) +
                                           " vertices, need " + std::to_string(t));
  edges.resize(want);
  return edges;
}

namespace detail {

// Forests from a Hamilton decomposition of g plus extra edges and vertices,
// dropping everything that is not an edge of g.
inline LinearForestSet strip_to(const Graph& g, const std::vector<std::vector<int>>& cycles) {
  const int n = g.vertex_count();
  auto keep = [&](int a, int b) { return a < n && b < n && g.has_edge(a, b); };
  LinearForestSet out;
  for (const auto& c : cycles) out.push_back(split_closed(c, keep));
  return out;
}

inline LinearForestSet arboricity_odd_degree(const Graph& g, Rng& rng, const HamiltonConfig& cfg) {
  const int n = g.vertex_count();
  const int d = g.max_degree();
  const auto m = complement_matching_cover(g, n - (d + 1));
  Graph aux(n + 1);
  for (const Edge& e : g.edges()) aux.add_edge(e.u, e.v);
  std::vector<char> covered(n, 0);
  for (const Edge& e : m) {
    aux.add_edge(e.u, e.v);
    covered[e.u] = covered[e.v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) aux.add_edge(v, n);
  return strip_to(g, hamilton_decompose(aux, rng, cfg));
}

}  // namespace detail

/// ceil((d+1)/2) linear forests of a d-regular graph with d >= floor((n-1)/2).
inline LinearForestSet arboricity_regular_large(const Graph& g, Rng& rng, const HamiltonConfig& cfg = {}) {
  const int n = g.vertex_count();
  require(n > 0, "arboricity_regular_large on empty graph");
  if (!is_regular(g)) fail(ErrorCode::HypothesisViolated, "graph is not regular");
  const int d = g.max_degree();
  if (d < (n - 1) / 2) fail(ErrorCode::HypothesisViolated, "degree below floor((n-1)/2)");
  if (d == 0) return {Part{}};
  if (d % 2 == 1) return detail::arboricity_odd_degree(g, rng, cfg);
  if (n % 2 == 1) {
    // One complement matching plus a new vertex gives an odd-degree regular
    // graph on an even number of vertices.
    const auto m = complement_matching_cover(g, n - (d + 1));
    Graph aux(n + 1);
    for (const Edge& e : g.edges()) aux.add_edge(e.u, e.v);
    std::vector<char> covered(n, 0);
    for (const Edge& e : m) {
      aux.add_edge(e.u, e.v);
      covered[e.u] = covered[e.v] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!covered[v]) aux.add_edge(v, n);
    LinearForestSet out;
    for (const auto& forest : detail::arboricity_odd_degree(aux, rng, cfg)) {
      Part kept;
      for (const auto& piece : forest)
        for (auto& run : detail::split_open(piece, [&](int a, int b) { return a < n && b < n && g.has_edge(a, b); }))
          kept.push_back(std::move(run));
      out.push_back(std::move(kept));
    }
    return out;
  }
  // d even, n even: two complement matchings and two new vertices.
  const auto m1 = complement_matching_cover(g, n - (d + 2));
  Graph with_m1 = g;
  for (const Edge& e : m1) with_m1.add_edge(e.u, e.v);
  const auto m2 = complement_matching_cover(with_m1, n - (d + 2));
  Graph aux(n + 2);
  for (const Edge& e : with_m1.edges()) aux.add_edge(e.u, e.v);
  std::vector<char> in1(n, 0), in2(n, 0);
  for (const Edge& e : m1) in1[e.u] = in1[e.v] = 1;
  for (const Edge& e : m2) {
    aux.add_edge(e.u, e.v);
    in2[e.u] = in2[e.v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (!in1[v]) aux.add_edge(v, n);
    if (!in2[v]) aux.add_edge(v, n + 1);
  }
  return detail::strip_to(g, hamilton_decompose(aux, rng, cfg));
}

}  // namespace qdecomp
