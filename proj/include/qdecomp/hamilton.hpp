#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/matching.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

/// Budgets for the randomized Hamilton searches.
struct HamiltonConfig {
  int restarts = 100;
  int backtrack_depth = 3;
  // Cycle-merging switch budget, per vertex.
  int merge_moves_per_vertex = 20;
  // Exhaustive decomposition is attempted up to this many vertices.
  int exact_limit = 10;
  long long exact_node_budget = 2'000'000;
};

namespace detail {

// Rotation-extension search on an undirected graph. Extends the current path
// at its end while possible; when stuck it closes the path into a cycle if one
// exists on the same vertex set and reopens it towards an outside vertex,
// otherwise it performs a random Posa rotation.
class PosaSearch {
 public:
  PosaSearch(const Graph& g, Rng& rng) : g_(g), rng_(rng), n_(g.vertex_count()), pos_(n_, -1) {}

  long long step_budget() const {
    const double lg = std::log2(std::max(2, n_));
    return static_cast<long long>(12.0 * n_ * lg) + 200;
  }

  std::vector<int> find_cycle() {
    if (n_ < 3) return {};
    start_path(static_cast<int>(uniform_index(rng_, n_)));
    const long long budget = step_budget();
    for (long long step = 0; step < budget; ++step) {
      if (extend()) continue;
      if (size() < n_ && other_end_extendable()) {
        reverse_tail(0);
        continue;
      }
      int close = closing_index();
      if (close >= 0) {
        reverse_tail(close + 1);
        if (size() == n_) return path_;
        if (reopen()) continue;
      }
      if (!rotate(0)) return {};
    }
    return {};
  }

  // Spanning path from a to b; start vertex is never moved.
  std::vector<int> find_path(int a, int b) {
    start_path(a);
    const long long budget = step_budget();
    for (long long step = 0; step < budget; ++step) {
      if (size() == n_) {
        if (path_.back() == b) return path_;
        for (int x : g_.neighbors(path_.back())) {
          int i = pos_[x];
          if (i + 1 < size() && path_[i + 1] == b) {
            reverse_tail(i + 1);
            return path_;
          }
        }
      } else if (extend(b)) {
        continue;
      } else if (extend()) {
        continue;
      }
      if (!rotate(1)) return {};
    }
    return {};
  }

 private:
  int size() const { return static_cast<int>(path_.size()); }

  void start_path(int s) {
    for (int v : path_) pos_[v] = -1;
    path_.clear();
    path_.push_back(s);
    pos_[s] = 0;
  }

  void reverse_tail(int from) {
    std::reverse(path_.begin() + from, path_.end());
    for (int i = from; i < size(); ++i) pos_[path_[i]] = i;
  }

  // Pushes an outside neighbour of the end, avoiding `avoid` unless it would be
  // the last vertex.
  bool extend(int avoid = -1) {
    const auto& nb = g_.neighbors(path_.back());
    if (nb.empty()) return false;
    const std::size_t off = uniform_index(rng_, nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) {
      int x = nb[(k + off) % nb.size()];
      if (pos_[x] >= 0) continue;
      if (x == avoid && size() + 1 < n_) continue;
      pos_[x] = size();
      path_.push_back(x);
      return true;
    }
    return false;
  }

  bool other_end_extendable() const {
    for (int x : g_.neighbors(path_.front()))
      if (pos_[x] < 0) return true;
    return false;
  }

  // Index i with end ~ path[i] and path[i+1] ~ start, or -1.
  int closing_index() {
    const int end = path_.back(), start = path_.front();
    if (size() >= 3 && g_.has_edge(end, start)) return size() - 2;
    const auto& nb = g_.neighbors(end);
    if (nb.empty()) return -1;
    const std::size_t off = uniform_index(rng_, nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) {
      int i = pos_[nb[(k + off) % nb.size()]];
      if (i >= 0 && i + 2 < size() && g_.has_edge(path_[i + 1], start)) return i;
    }
    return -1;
  }

  // path_ is a cycle (closing edge back()~front()); reopen it next to a vertex
  // with an outside neighbour and append that neighbour.
  bool reopen() {
    const std::size_t off = uniform_index(rng_, path_.size());
    for (std::size_t k = 0; k < path_.size(); ++k) {
      int j = static_cast<int>((k + off) % path_.size());
      for (int u : g_.neighbors(path_[j])) {
        if (pos_[u] >= 0) continue;
        std::rotate(path_.begin(), path_.begin() + j + 1, path_.end());
        for (int i = 0; i < size(); ++i) pos_[path_[i]] = i;
        pos_[u] = size();
        path_.push_back(u);
        return true;
      }
    }
    return false;
  }

  // Random Posa rotation about a neighbour path[i] of the end, i >= min_index.
  bool rotate(int min_index) {
    const int end = path_.back();
    const auto& nb = g_.neighbors(end);
    scratch_.clear();
    for (int x : nb) {
      int i = pos_[x];
      if (i >= min_index && i + 2 < size()) scratch_.push_back(i);
    }
    if (scratch_.empty()) return false;
    int i = scratch_[uniform_index(rng_, scratch_.size())];
    reverse_tail(i + 1);
    return true;
  }

  const Graph& g_;
  Rng& rng_;
  int n_;
  std::vector<int> pos_;
  std::vector<int> path_;
  std::vector<int> scratch_;
};

inline bool min_degree_at_least(const Graph& g, int d) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < d) return false;
  return true;
}

// Successor map of a random cycle cover (1-factor) of d, if one exists.
inline std::optional<std::vector<int>> random_cycle_cover(const Digraph& d, Rng& rng) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = d.out_neighbors(v);
    shuffle(adj[v], rng);
  }
  // Randomize left order too by relabelling.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);
  std::vector<std::vector<int>> adj_p(n);
  for (int i = 0; i < n; ++i) adj_p[i] = adj[perm[i]];
  auto m = BipartiteMatcher(n, n, std::move(adj_p)).solve();
  std::vector<int> succ(n, -1);
  for (int i = 0; i < n; ++i) {
    if (m[i] < 0) return std::nullopt;
    succ[perm[i]] = m[i];
  }
  return succ;
}

inline int label_cycles(const std::vector<int>& succ, std::vector<int>& comp) {
  const int n = static_cast<int>(succ.size());
  comp.assign(n, -1);
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (succ[v] < 0 || comp[v] >= 0) continue;
    for (int x = v; comp[x] < 0; x = succ[x]) comp[x] = c;
    ++c;
  }
  return c;
}

// Karp-Steele style patching of a cycle cover inside d: swap the successors of
// a and c (from different cycles) whenever a->succ[c] and c->succ[a] are arcs.
inline bool patch_cycle_cover(const Digraph& d, std::vector<int>& succ, Rng& rng, int kicks) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> comp, order(n);
  std::iota(order.begin(), order.end(), 0);
  for (;;) {
    if (label_cycles(succ, comp) <= 1) return true;
    shuffle(order, rng);
    bool merged = false;
    for (int a : order) {
      for (int c : order) {
        if (comp[c] == comp[a]) continue;
        if (d.has_arc(a, succ[c]) && d.has_arc(c, succ[a])) {
          std::swap(succ[a], succ[c]);
          merged = true;
          break;
        }
      }
      if (merged) break;
    }
    if (merged) continue;
    if (kicks-- <= 0) return false;
    // Split a random cycle somewhere; the next round may merge differently.
    bool kicked = false;
    for (int a : order) {
      for (int c : order) {
        if (c == a || comp[c] != comp[a] || succ[a] == c || succ[c] == a) continue;
        if (d.has_arc(a, succ[c]) && d.has_arc(c, succ[a])) {
          std::swap(succ[a], succ[c]);
          kicked = true;
          break;
        }
      }
      if (kicked) break;
    }
    if (!kicked) return false;
  }
}

inline std::vector<int> cycle_from_successor(const std::vector<int>& succ, int start) {
  std::vector<int> cyc{start};
  for (int x = succ[start]; x != start; x = succ[x]) cyc.push_back(x);
  return cyc;
}

}  // namespace detail

/// Undirected Hamilton cycle by rotation-extension with random restarts.
inline std::optional<std::vector<int>> try_hamilton_cycle(const Graph& g, Rng& rng, int restarts) {
  if (g.vertex_count() < 3 || !detail::min_degree_at_least(g, 2)) return std::nullopt;
  detail::PosaSearch search(g, rng);
  for (int r = 0; r < restarts; ++r) {
    auto c = search.find_cycle();
    if (!c.empty()) return c;
  }
  return std::nullopt;
}

/// Directed Hamilton cycle: random cycle cover, then patching with restarts.
inline std::optional<std::vector<int>> try_hamilton_cycle(const Digraph& d, Rng& rng, int restarts) {
  const int n = d.vertex_count();
  if (n < 2 || d.min_semidegree() < 1) return std::nullopt;
  for (int r = 0; r < restarts; ++r) {
    auto cover = detail::random_cycle_cover(d, rng);
    if (!cover) return std::nullopt;  // no 1-factor, so no Hamilton cycle
    if (detail::patch_cycle_cover(d, *cover, rng, n)) return detail::cycle_from_successor(*cover, 0);
  }
  return std::nullopt;
}

inline bool is_hamilton_cycle(const Graph& g, std::span<const int> cyc) {
  const int n = g.vertex_count();
  if (static_cast<int>(cyc.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int v = cyc[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
    if (!g.has_edge(v, cyc[(i + 1) % cyc.size()])) return false;
  }
  return true;
}

inline bool is_hamilton_cycle(const Digraph& d, std::span<const int> cyc) {
  const int n = d.vertex_count();
  if (static_cast<int>(cyc.size()) != n || n < 2) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int v = cyc[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
    if (!d.has_arc(v, cyc[(i + 1) % cyc.size()])) return false;
  }
  return true;
}

inline bool is_hamilton_path(const Graph& g, std::span<const int> path, int a, int b) {
  const int n = g.vertex_count();
  if (static_cast<int>(path.size()) != n || path.front() != a || path.back() != b) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i + 1 < path.size() && !g.has_edge(path[i], path[i + 1])) return false;
  }
  return true;
}

/// Hamilton cycle as a vertex sequence; NotFound when the budget runs out.
template <class G>
std::vector<int> hamilton_cycle(const G& g, Rng& rng, const HamiltonConfig& cfg = {}) {
  require(g.vertex_count() > 0, "hamilton_cycle on empty graph");
  auto c = try_hamilton_cycle(g, rng, cfg.restarts);
  if (!c) fail(ErrorCode::NotFound, "Hamilton cycle search exhausted its budget");
  if (!is_hamilton_cycle(g, *c)) fail(ErrorCode::NotFound, "internal: unverified Hamilton cycle");
  return *c;
}

inline std::optional<std::vector<int>> try_hamilton_path(const Graph& g, int a, int b, Rng& rng, int restarts) {
  const int n = g.vertex_count();
  if (n == 2) return g.has_edge(a, b) ? std::optional<std::vector<int>>({a, b}) : std::nullopt;
  if (g.degree(a) < 1 || g.degree(b) < 1) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (v != a && v != b && g.degree(v) < 2) return std::nullopt;
  detail::PosaSearch search(g, rng);
  for (int r = 0; r < restarts; ++r) {
    auto p = search.find_path(a, b);
    if (!p.empty()) return p;
  }
  return std::nullopt;
}

/// Spanning path from a to b by rotation-extension with a pinned start.
inline std::vector<int> hamilton_path(const Graph& g, int a, int b, Rng& rng, const HamiltonConfig& cfg = {}) {
  const int n = g.vertex_count();
  require(a >= 0 && b >= 0 && a < n && b < n && a != b, "hamilton_path needs distinct endpoints");
  auto p = try_hamilton_path(g, a, b, rng, cfg.restarts);
  if (!p || !is_hamilton_path(g, *p, a, b)) fail(ErrorCode::NotFound, "Hamilton path search exhausted its budget");
  return *p;
}

/// Same contract as hamilton_path, via the contraction reduction: merge {a,b}
/// into one vertex z with arcs z->N(a)\{b} and N(b)\{a}->z, double every other
/// edge, and look for a directed Hamilton cycle.
inline std::vector<int> hamilton_path_via_contraction(const Graph& g, int a, int b, Rng& rng,
                                                      const HamiltonConfig& cfg = {}) {
  const int n = g.vertex_count();
  require(a >= 0 && b >= 0 && a < n && b < n && a != b, "hamilton_path needs distinct endpoints");
  if (n == 2) {
    if (g.has_edge(a, b)) return {a, b};
    fail(ErrorCode::NotFound, "no Hamilton path");
  }
  // Local ids: z = 0, the rest in order.
  std::vector<int> local(n, -1), host{-1};
  for (int v = 0; v < n; ++v)
    if (v != a && v != b) {
      local[v] = static_cast<int>(host.size());
      host.push_back(v);
    }
  Digraph d(static_cast<int>(host.size()));
  for (int x : g.neighbors(a))
    if (x != b) d.add_arc(0, local[x]);
  for (int x : g.neighbors(b))
    if (x != a) d.add_arc(local[x], 0);
  for (const Edge& e : g.edges()) {
    if (e.touches(a) || e.touches(b)) continue;
    d.add_arc(local[e.u], local[e.v]);
    d.add_arc(local[e.v], local[e.u]);
  }
  auto c = try_hamilton_cycle(d, rng, cfg.restarts);
  if (!c) fail(ErrorCode::NotFound, "Hamilton path search (contraction) exhausted its budget");
  auto it = std::find(c->begin(), c->end(), 0);
  std::rotate(c->begin(), it, c->end());
  std::vector<int> path{a};
  for (std::size_t i = 1; i < c->size(); ++i) path.push_back(host[(*c)[i]]);
  path.push_back(b);
  if (!is_hamilton_path(g, path, a, b)) fail(ErrorCode::NotFound, "internal: unverified Hamilton path");
  return path;
}

/// Perfect matching of g (|V(g)| even): alternate edges of a Hamilton cycle,
/// falling back to a maximum matching when the cycle search fails.
inline std::vector<Edge> perfect_matching_even_set(const Graph& g, Rng& rng, const HamiltonConfig& cfg = {}) {
  const int n = g.vertex_count();
  require(n % 2 == 0, "perfect_matching_even_set needs an even vertex count");
  if (n == 0) return {};
  if (n >= 4) {
    if (auto c = try_hamilton_cycle(g, rng, std::min(cfg.restarts, 5))) {
      std::vector<Edge> m;
      const int shift = static_cast<int>(uniform_index(rng, 2));
      for (int i = shift; i < n; i += 2) m.emplace_back((*c)[i], (*c)[(i + 1) % n]);
      return m;
    }
  }
  auto mate = maximum_matching(g);
  auto m = matching_edges(mate);
  if (static_cast<int>(m.size()) * 2 != n) fail(ErrorCode::NotFound, "graph has no perfect matching");
  return m;
}

namespace detail {

// Orientation along Euler circuits of every component: in = out everywhere.
inline std::vector<Arc> euler_circuit_orientation(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
    std::sort(adj[v].begin(), adj[v].end());
  }
  std::vector<std::size_t> ptr(n, 0);
  Graph used(n);
  std::vector<Arc> arcs;
  for (int s = 0; s < n; ++s) {
    // Hierholzer; arcs recorded in traversal direction.
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      while (ptr[v] < adj[v].size() && used.has_edge(v, adj[v][ptr[v]])) ++ptr[v];
      if (ptr[v] == adj[v].size()) {
        stack.pop_back();
        continue;
      }
      int w = adj[v][ptr[v]];
      used.add_edge(v, w);
      arcs.push_back({v, w});
      stack.push_back(w);
    }
  }
  return arcs;
}

}  // namespace detail

/// A 2-factor as its list of cycles.
using TwoFactor = std::vector<std::vector<int>>;

/// Petersen: a 2k-regular graph splits into k spanning 2-regular subgraphs.
/// Orient along Euler circuits, then peel perfect matchings off the k-regular
/// bipartite out/in graph.
inline std::vector<TwoFactor> two_factorization(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  require(is_regular(g) && g.max_degree() % 2 == 0, "two_factorization needs an even-regular graph");
  const int k = g.max_degree() / 2;
  auto arcs = detail::euler_circuit_orientation(g);
  Digraph d(n, arcs);
  std::vector<TwoFactor> out;
  for (int f = 0; f < k; ++f) {
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = d.out_neighbors(v);
    auto m = BipartiteMatcher(n, n, std::move(adj)).solve();
    TwoFactor factor;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
      if (m[v] < 0) fail(ErrorCode::NotFound, "internal: regular bipartite graph without perfect matching");
    }
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      std::vector<int> cyc;
      for (int x = v; !seen[x]; x = m[x]) {
        seen[x] = 1;
        cyc.push_back(x);
      }
      factor.push_back(std::move(cyc));
    }
    for (int v = 0; v < n; ++v) d.remove_arc(v, m[v]);
    out.push_back(std::move(factor));
  }
  return out;
}

}  // namespace qdecomp
