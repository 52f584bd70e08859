#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <type_traits>
#include <vector>

#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/maxflow.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

/// gamma: tolerated imbalance relative to the prescription base. xi: base
/// prescription as a fraction of n; 0 picks it from the observed imbalance.
/// g1_share: chance an edge lands in the half whose imbalance gets corrected.
struct OrientationConfig {
  double gamma = 0.1;
  double xi = 0.0;
  int retry_budget = 100;
  double g1_share = 0.5;
};

struct DegreePrescription {
  std::vector<int> n_plus;
  std::vector<int> n_minus;
};

struct SplitPartition {
  std::vector<int> S;
  std::vector<char> in_s;  // indicator over V

  bool separates(const PairList& m) const {
    for (auto [x, y] : m.pairs())
      if (in_s[x] != in_s[y]) return true;
    return false;
  }
};

namespace detail {

template <class G>
const std::vector<int>& outs(const G& g, int v) {
  if constexpr (std::is_same_v<G, Digraph>) return g.out_neighbors(v);
  else return g.neighbors(v);
}

template <class G>
const std::vector<int>& ins(const G& g, int v) {
  if constexpr (std::is_same_v<G, Digraph>) return g.in_neighbors(v);
  else return g.neighbors(v);
}

}  // namespace detail

/// Checks the three partition conditions: balanced size, every vertex keeps
/// at least alpha*n/6 (out/in) neighbours on both sides, M not separated.
template <class G>
bool split_conditions_hold(const G& g, const SplitPartition& part, const PairList& m, double alpha) {
  const int n = g.vertex_count();
  const int s = static_cast<int>(part.S.size());
  if (3 * s < n || 3 * s > 2 * n) return false;
  if (part.separates(m)) return false;
  const double need = alpha * n / 6 - 1e-9;
  for (int v = 0; v < n; ++v) {
    int out_s = 0, in_s = 0;
    for (int x : detail::outs(g, v)) out_s += part.in_s[x];
    for (int x : detail::ins(g, v)) in_s += part.in_s[x];
    const int out_rest = static_cast<int>(detail::outs(g, v).size()) - out_s;
    const int in_rest = static_cast<int>(detail::ins(g, v).size()) - in_s;
    if (std::min({out_s, in_s, out_rest, in_rest}) < need) return false;
  }
  return true;
}

/// Random S that keeps every pair of M together: M is padded to a near-perfect
/// pairing and one coin per pair decides its side. Redrawn until the
/// conditions hold.
template <class G>
SplitPartition split_partition(const G& g, const PairList& m, double alpha, Rng& rng, int retry_budget = 100) {
  const int n = g.vertex_count();
  m.validate(n);
  std::vector<std::pair<int, int>> pairs = m.pairs();
  std::vector<char> covered(n, 0);
  for (auto [x, y] : pairs) covered[x] = covered[y] = 1;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
      if (!covered[v]) free.push_back(v);
    shuffle(free, rng);
    std::vector<std::pair<int, int>> all = pairs;
    for (std::size_t i = 0; i + 1 < free.size(); i += 2) all.emplace_back(free[i], free[i + 1]);
    SplitPartition part{{}, std::vector<char>(n, 0)};
    for (auto [x, y] : all)
      if (coin_flip(rng)) part.in_s[x] = part.in_s[y] = 1;
    if (free.size() % 2 == 1 && coin_flip(rng)) part.in_s[free.back()] = 1;
    for (int v = 0; v < n; ++v)
      if (part.in_s[v]) part.S.push_back(v);
    if (split_conditions_hold(g, part, m, alpha)) return part;
  }
  fail(ErrorCode::RetryExhausted, "no admissible split within " + std::to_string(retry_budget) + " draws");
}

/// Spanning subdigraph with d+(v) = n_plus[v], d-(v) = n_minus[v], by max-flow
/// on source -> v_out -> u_in -> sink.
inline Digraph degree_prescribed_subdigraph(const Digraph& d, const DegreePrescription& presc) {
  const int n = d.vertex_count();
  require(static_cast<int>(presc.n_plus.size()) == n && static_cast<int>(presc.n_minus.size()) == n,
          "prescription size mismatch");
  long long plus = 0, minus = 0;
  for (int v = 0; v < n; ++v) {
    require(presc.n_plus[v] >= 0 && presc.n_minus[v] >= 0, "negative prescription");
    plus += presc.n_plus[v];
    minus += presc.n_minus[v];
  }
  require(plus == minus, "prescription sums differ");
  const int src = 2 * n, sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    if (presc.n_plus[v] > 0) net.add_edge(src, v, presc.n_plus[v]);
    if (presc.n_minus[v] > 0) net.add_edge(n + v, sink, presc.n_minus[v]);
  }
  std::vector<std::pair<int, Arc>> arc_ids;
  for (const Arc& a : d.arcs()) arc_ids.emplace_back(net.add_edge(a.from, n + a.to, 1), a);
  const long long f = net.max_flow(src, sink);
  if (f < plus)
    fail(ErrorCode::Infeasible, "max flow " + std::to_string(f) + " < required " + std::to_string(plus));
  Digraph out(n);
  for (const auto& [id, a] : arc_ids)
    if (net.flow_on(id) > 0) out.add_arc(a.from, a.to);
  return out;
}

/// Eulerian orientation of an even graph: repeatedly walk along unused edges
/// until the walk revisits a vertex, and orient the closed cycle along the walk.
inline Digraph cycle_peel_orientation(const Graph& h) {
  const int n = h.vertex_count();
  require(is_eulerian(h), "cycle_peel_orientation needs all degrees even");
  Graph rest = h;
  Digraph out(n);
  std::vector<int> pos(n, -1), walk;
  for (int s = 0; s < n; ++s) {
    while (rest.degree(s) > 0) {
      walk.assign(1, s);
      pos[s] = 0;
      for (;;) {
        int v = walk.back();
        int w = rest.neighbors(v).front();
        rest.remove_edge(v, w);
        if (pos[w] >= 0) {
          // Close the cycle walk[pos[w]..] -> w.
          for (std::size_t i = pos[w]; i + 1 < walk.size(); ++i) out.add_arc(walk[i], walk[i + 1]);
          out.add_arc(v, w);
          for (std::size_t i = pos[w] + 1; i < walk.size(); ++i) pos[walk[i]] = -1;
          walk.resize(pos[w] + 1);
          // An interior walk end has used an odd number of edges, so only the
          // start can run dry here.
          if (rest.degree(w) == 0) break;
          continue;
        }
        pos[w] = static_cast<int>(walk.size());
        walk.push_back(w);
      }
      for (int v : walk) pos[v] = -1;
    }
  }
  return out;
}

/// Balanced orientation of an even graph built like the quasirandom proof:
/// random orientation split into parts G1, G2; a flow-chosen subdigraph of G2
/// cancels the imbalance of G1; the leftover edges are even and peeled into
/// consistently oriented cycles.
inline Digraph eulerian_orientation_quasirandom(const Graph& g, const OrientationConfig& cfg, Rng& rng) {
  const int n = g.vertex_count();
  if (!is_eulerian(g)) fail(ErrorCode::HypothesisViolated, "graph has odd-degree vertices");
  require(cfg.retry_budget >= 1, "retry_budget must be positive");
  const auto edges = g.edges();
  for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    // Even split first; later draws give G1 a shrinking share so its imbalance
    // fits inside G2 at small n.
    const int late = std::max(0, attempt - cfg.retry_budget / 4);
    const double share = cfg.g1_share * std::pow(0.85, late);
    Digraph g1(n), g2(n);
    for (const Edge& e : edges) {
      const bool forward = coin_flip(rng);
      Digraph& half = uniform_unit(rng) < share ? g1 : g2;
      forward ? half.add_arc(e.u, e.v) : half.add_arc(e.v, e.u);
    }
    int max_imb = 0, cap = n;
    for (int v = 0; v < n; ++v) {
      max_imb = std::max(max_imb, std::abs(g1.out_degree(v) - g1.in_degree(v)));
      cap = std::min({cap, g2.out_degree(v), g2.in_degree(v)});
    }
    // Desk-scale base: the largest observed imbalance plus a margin, capped so
    // every target fits in G2, then lowered until the flow goes through.
    std::vector<int> bases;
    if (cfg.xi > 0) {
      bases.push_back(static_cast<int>(std::floor(cfg.xi * n)));
    } else {
      int b = max_imb + std::max(1, static_cast<int>(std::ceil(cfg.gamma * max_imb)));
      b = std::min(b, std::max(0, cap - max_imb));
      for (; b > 0; b /= 2) bases.push_back(b);
      bases.push_back(0);
    }
    std::optional<Digraph> g2p;
    for (int base : bases) {
      DegreePrescription presc{std::vector<int>(n), std::vector<int>(n)};
      for (int v = 0; v < n; ++v) {
        const int diff = g1.out_degree(v) - g1.in_degree(v);
        presc.n_plus[v] = base + std::max(0, -diff);
        presc.n_minus[v] = base + std::max(0, diff);
      }
      try {
        g2p = degree_prescribed_subdigraph(g2, presc);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Infeasible) throw;
      }
    }
    if (!g2p) continue;
    Digraph out = g1;
    Graph h(n);
    for (const Arc& a : g2.arcs()) {
      if (g2p->has_arc(a.from, a.to)) out.add_arc(a.from, a.to);
      else h.add_edge(a.from, a.to);
    }
    for (const Arc& a : cycle_peel_orientation(h).arcs()) out.add_arc(a.from, a.to);
    return out;
  }
  fail(ErrorCode::Infeasible, "flow correction infeasible in every draw");
}

}  // namespace qdecomp
