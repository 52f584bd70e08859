#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qdecomp/decomposition.hpp"
#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/hamilton.hpp"
#include "qdecomp/hamilton_decomp.hpp"
#include "qdecomp/randgen.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

struct DeficiencyVector {
  std::vector<int> def;    // indexed by vertex
  std::vector<int> order;  // vertices by deficiency, largest first, ties by id

  std::vector<int> sorted() const {
    std::vector<int> out;
    for (int v : order) out.push_back(def[v]);
    return out;
  }
};

/// Colours are 0..colors-1; one entry per edge, in edge order.
struct EdgeColoring {
  int colors = 0;
  std::vector<std::pair<Edge, int>> color;
};

enum class ColorClass { Class1Candidate, Class2 };

inline const char* to_string(ColorClass c) { return c == ColorClass::Class2 ? "class-2" : "class-1-candidate"; }

struct ColoringConfig {
  HamiltonConfig hamilton;
  // 0 picks max(1, floor(alpha*n/6)); negative starts there and grows until
  // the forests fit below Delta.
  int matching_cap = 0;
  int linkage_attempts = 20;
  // Random-walk budget per uncoloured edge when repairing down to Delta colours.
  long long repair_steps_per_edge = 2000;
  int repair_rounds = 20;
  // Exact Delta-colourability search is tried up to this many edges.
  int exact_edge_limit = 40;
  long long exact_node_budget = 5'000'000;
};

inline DeficiencyVector deficiencies(const Graph& g) {
  const int n = g.vertex_count();
  const int top = g.max_degree();
  DeficiencyVector out{std::vector<int>(n), std::vector<int>(n)};
  for (int v = 0; v < n; ++v) out.def[v] = top - g.degree(v);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) { return out.def[a] > out.def[b]; });
  return out;
}

/// Largest deficiency against the sum of the rest. Only the even-order case
/// is decided.
inline ColorClass overfull_criterion(const Graph& g) {
  if (g.vertex_count() % 2 != 0) fail(ErrorCode::OddOrder, "overfull criterion needs an even vertex count");
  const auto s = deficiencies(g).sorted();
  if (s.empty()) return ColorClass::Class1Candidate;
  const long long rest = std::accumulate(s.begin() + 1, s.end(), 0LL);
  return s[0] > rest ? ColorClass::Class2 : ColorClass::Class1Candidate;
}

/// Odd vertex subset whose induced subgraph has more than Delta*(|H|-1)/2 edges.
inline std::optional<std::vector<int>> overfull_brute(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14) fail(ErrorCode::UsageError, "overfull_brute limited to n <= 14 (got " + std::to_string(n) + ")");
  const int top = g.max_degree();
  std::vector<std::uint32_t> nb(n, 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size % 2 == 0) continue;
    int twice = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) twice += __builtin_popcount(nb[v] & s);
    if (twice / 2 > top * (size - 1) / 2) {
      std::vector<int> w;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1) w.push_back(v);
      return w;
    }
  }
  return std::nullopt;
}

/// Multigraph with the given descending degree sequence on vertices 0..n-1:
/// join the two largest remaining degrees, decrement, re-sort.
inline Multigraph hakimi_realize(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  for (int i = 0; i < n; ++i) {
    require(seq[i] >= 0, "degree sequence has a negative entry");
    require(i == 0 || seq[i - 1] >= seq[i], "degree sequence must be descending");
  }
  const long long total = std::accumulate(seq.begin(), seq.end(), 0LL);
  if (total % 2 != 0) fail(ErrorCode::Infeasible, "parity: degree sum is odd");
  if (n > 0 && seq[0] > total - seq[0]) fail(ErrorCode::Infeasible, "dominance: largest degree exceeds the sum of the rest");
  Multigraph out(n);
  std::vector<int> rem = seq, idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return rem[a] > rem[b]; });
    if (n < 2 || rem[idx[0]] == 0) break;
    const int a = idx[0], b = idx[1];
    out.add_edge(a, b);
    --rem[a];
    --rem[b];
  }
  return out;
}

/// Greedy proper colouring of the edge multiset, then every class cut into
/// pieces of at most cap edges.
inline std::vector<std::vector<Edge>> matching_partition_multigraph(const Multigraph& a, int cap) {
  require(cap >= 1, "matching cap must be positive");
  const int n = a.vertex_count();
  std::vector<std::vector<char>> used(n);
  std::vector<std::vector<Edge>> classes;
  for (const Edge& e : a.edges()) {
    int c = 0;
    auto busy = [&](int v) { return c < static_cast<int>(used[v].size()) && used[v][c]; };
    while (busy(e.u) || busy(e.v)) ++c;
    for (int v : {e.u, e.v}) {
      if (static_cast<int>(used[v].size()) <= c) used[v].resize(c + 1, 0);
      used[v][c] = 1;
    }
    if (static_cast<int>(classes.size()) <= c) classes.resize(c + 1);
    classes[c].push_back(e);
  }
  std::vector<std::vector<Edge>> out;
  for (const auto& cls : classes)
    for (std::size_t i = 0; i < cls.size(); i += cap)
      out.emplace_back(cls.begin() + i, cls.begin() + std::min(cls.size(), i + cap));
  return out;
}

/// Vertex-disjoint paths covering V(G), the i-th joining the i-th pair. All
/// but the last have length at most 3; the last is a Hamilton path of what
/// is left. Pair order is reshuffled between attempts.
inline std::vector<VertexSequence> spanning_linkage(const Graph& g, const PairList& m, Rng& rng,
                                                    const HamiltonConfig& cfg = {}, int attempts = 20) {
  const int n = g.vertex_count();
  m.validate(n);
  require(!m.pairs().empty(), "spanning_linkage needs at least one pair");
  for (int attempt = 0; attempt < attempts; ++attempt) {
    auto pairs = m.pairs();
    if (attempt > 0) shuffle(pairs, rng);
    std::vector<char> blocked(n, 0);
    for (auto [a, b] : pairs) blocked[a] = blocked[b] = 1;
    std::vector<VertexSequence> paths;
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      auto free_vertex = [&](int x) { return !blocked[x]; };
      VertexSequence p;
      if (g.has_edge(a, b)) {
        p = {a, b};
      } else {
        std::vector<int> common;
        for (int x : g.neighbors(a))
          if (free_vertex(x) && g.has_edge(x, b)) common.push_back(x);
        if (!common.empty()) {
          p = {a, common[uniform_index(rng, common.size())], b};
        } else {
          std::vector<std::pair<int, int>> bridges;
          for (int x : g.neighbors(a)) {
            if (!free_vertex(x)) continue;
            for (int y : g.neighbors(x))
              if (y != a && free_vertex(y) && g.has_edge(y, b)) bridges.emplace_back(x, y);
          }
          if (bridges.empty()) {
            ok = false;
            break;
          }
          auto [x, y] = bridges[uniform_index(rng, bridges.size())];
          p = {a, x, y, b};
        }
      }
      for (int v : p) blocked[v] = 1;
      paths.push_back(std::move(p));
    }
    if (!ok) continue;
    const auto [a, b] = pairs.back();
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!blocked[v] || v == a || v == b) rest.push_back(v);
    auto sub = induced_subgraph(g, rest);
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = static_cast<int>(i);
    auto hp = try_hamilton_path(sub.graph, local[a], local[b], rng, std::max(1, cfg.restarts / 10));
    if (!hp) continue;
    VertexSequence last;
    for (int x : *hp) last.push_back(sub.to_host[x]);
    paths.push_back(std::move(last));
    // Report in the caller's pair order.
    std::vector<VertexSequence> out;
    for (auto pr : m.pairs())
      for (auto& p : paths)
        if (!p.empty() && p.front() == pr.first && p.back() == pr.second) out.push_back(std::move(p));
    return out;
  }
  fail(ErrorCode::NotFound, "spanning linkage failed in every attempt");
}

namespace detail {

// Partial proper edge colouring with constant-time lookups.
class ColorState {
 public:
  ColorState(const Graph& g, int k) : g_(g), n_(g.vertex_count()), k_(k), col_(n_ * n_, -1), at_(n_ * k, -1) {}

  int colors() const { return k_; }
  int color(int u, int v) const { return col_[u * n_ + v]; }
  int via(int v, int c) const { return at_[v * k_ + c]; }
  bool is_free(int v, int c) const { return via(v, c) < 0; }
  int first_free(int v) const {
    for (int c = 0; c < k_; ++c)
      if (is_free(v, c)) return c;
    return -1;
  }
  std::vector<int> free_colors(int v) const {
    std::vector<int> out;
    for (int c = 0; c < k_; ++c)
      if (is_free(v, c)) out.push_back(c);
    return out;
  }

  void set(int u, int v, int c) {
    col_[u * n_ + v] = col_[v * n_ + u] = c;
    at_[u * k_ + c] = v;
    at_[v * k_ + c] = u;
  }
  void unset(int u, int v) {
    const int c = color(u, v);
    if (c < 0) return;
    col_[u * n_ + v] = col_[v * n_ + u] = -1;
    at_[u * k_ + c] = -1;
    at_[v * k_ + c] = -1;
  }

  // Alternating path from x starting with colour first, then second, ...
  std::vector<int> chain(int x, int first, int second) const {
    std::vector<int> walk{x};
    int c = first;
    while (via(walk.back(), c) >= 0) {
      walk.push_back(via(walk.back(), c));
      if (walk.size() > static_cast<std::size_t>(n_) + 1) break;
      c = c == first ? second : first;
    }
    return walk;
  }

  void swap_chain(const std::vector<int>& walk, int first, int second) {
    std::vector<int> cs;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) cs.push_back(color(walk[i], walk[i + 1]));
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) unset(walk[i], walk[i + 1]);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) set(walk[i], walk[i + 1], cs[i] == first ? second : first);
  }

  EdgeColoring result() const {
    EdgeColoring out{0, {}};
    for (const Edge& e : g_.edges()) {
      const int c = color(e.u, e.v);
      require(c >= 0, "internal: edge left uncoloured");
      out.color.emplace_back(e, c);
      out.colors = std::max(out.colors, c + 1);
    }
    return out;
  }

 private:
  const Graph& g_;
  int n_, k_;
  std::vector<int> col_, at_;
};

// Misra-Gries step for an uncoloured edge uv with Delta+1 colours.
inline void fan_color(ColorState& st, const Graph& g, int u, int v) {
  std::vector<int> fan{v};
  std::vector<char> in_fan(g.vertex_count(), 0);
  in_fan[v] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : g.neighbors(u)) {
      const int c = st.color(u, x);
      if (in_fan[x] || c < 0 || !st.is_free(fan.back(), c)) continue;
      fan.push_back(x);
      in_fan[x] = 1;
      grew = true;
      break;
    }
  }
  const int c = st.first_free(u), d = st.first_free(fan.back());
  if (c != d) st.swap_chain(st.chain(u, d, c), d, c);
  std::size_t w = 0;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (i > 0 && !st.is_free(fan[i - 1], st.color(u, fan[i]))) break;
    if (st.is_free(fan[i], d)) {
      w = i;
      break;
    }
  }
  for (std::size_t j = 0; j < w; ++j) {
    const int next = st.color(u, fan[j + 1]);
    st.unset(u, fan[j + 1]);
    st.set(u, fan[j], next);
  }
  st.set(u, fan[w], d);
}

// Exact search over colourings with k colours, most constrained edge first.
enum class SearchStatus { Found, None, Budget };

inline SearchStatus exact_coloring(const Graph& g, int k, long long budget, std::vector<int>& assignment) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.vertex_count();
  if (m == 0) return SearchStatus::Found;
  if (k <= 0) return SearchStatus::None;
  std::vector<std::uint64_t> used(n, 0);
  assignment.assign(m, -1);
  long long nodes = 0;
  int top_used = -1;
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  auto rec = [&](auto&& self, int placed) -> SearchStatus {
    if (placed == m) return SearchStatus::Found;
    if (++nodes > budget) return SearchStatus::Budget;
    int best = -1, best_opts = 65;
    for (int i = 0; i < m; ++i) {
      if (assignment[i] >= 0) continue;
      const std::uint64_t busy = used[edges[i].u] | used[edges[i].v];
      int opts = k - __builtin_popcountll(busy & ((k >= 64) ? ~0ULL : ((1ULL << k) - 1)));
      if (opts < best_opts) best_opts = opts, best = i;
      if (opts == 0) return SearchStatus::None;
    }
    const Edge e = edges[best];
    const std::uint64_t busy = used[e.u] | used[e.v];
    // Colours above the highest one in use are interchangeable.
    const int limit = std::min(k - 1, top_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (busy >> c & 1) continue;
      const int saved = top_used;
      top_used = std::max(top_used, c);
      assignment[best] = c;
      used[e.u] |= 1ULL << c;
      used[e.v] |= 1ULL << c;
      auto s = self(self, placed + 1);
      if (s != SearchStatus::None) return s;
      used[e.u] &= ~(1ULL << c);
      used[e.v] &= ~(1ULL << c);
      assignment[best] = -1;
      top_used = saved;
    }
    return SearchStatus::None;
  };
  return rec(rec, 0);
}

// Recolours the edges of colour `drop` with the other colours, using Kempe
// swaps and a random walk of the uncoloured edge.
inline bool kempe_repair(ColorState& st, const Graph& g, int drop, Rng& rng, long long steps) {
  std::vector<Edge> pending;
  for (const Edge& e : g.edges())
    if (st.color(e.u, e.v) == drop) pending.push_back(e);
  for (const Edge& e : pending) st.unset(e.u, e.v);
  auto usable = [&](int v) {
    auto f = st.free_colors(v);
    f.erase(std::remove(f.begin(), f.end(), drop), f.end());
    return f;
  };
  for (Edge e : pending) {
    int u = e.u, v = e.v;
    bool done = false;
    for (long long step = 0; step < steps && !done; ++step) {
      const auto fu = usable(u), fv = usable(v);
      if (fu.empty() || fv.empty()) return false;
      for (int a : fu)
        if (st.is_free(v, a)) {
          st.set(u, v, a);
          done = true;
          break;
        }
      if (done) break;
      for (int a : fu) {
        for (int b : fv) {
          auto walk = st.chain(v, a, b);
          if (walk.back() == u) continue;
          st.swap_chain(walk, a, b);
          st.set(u, v, a);
          done = true;
          break;
        }
        if (done) break;
      }
      if (done) break;
      // Hand the gap to a neighbour: uv takes colour a, the edge of colour a at v is freed.
      if (coin_flip(rng)) std::swap(u, v);
      const auto fu2 = usable(u);
      const int a = fu2[uniform_index(rng, fu2.size())];
      const int w = st.via(v, a);
      st.unset(v, w);
      st.set(u, v, a);
      u = v;
      v = w;
    }
    if (!done) return false;
  }
  return true;
}

}  // namespace detail

/// Proper colouring with at most Delta+1 colours (Misra-Gries fan rotation).
inline EdgeColoring vizing_color(const Graph& g) {
  const int k = g.max_degree() + 1;
  if (g.edge_count() == 0) return {};
  detail::ColorState st(g, k);
  for (const Edge& e : g.edges()) detail::fan_color(st, g, e.u, e.v);
  return st.result();
}

inline bool is_proper_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.color.size() != g.edge_count()) return false;
  std::vector<std::vector<char>> seen(g.vertex_count(), std::vector<char>(std::max(1, c.colors), 0));
  std::vector<Edge> listed;
  for (const auto& [e, col] : c.color) {
    if (col < 0 || col >= c.colors || !g.has_edge(e.u, e.v)) return false;
    if (seen[e.u][col] || seen[e.v][col]) return false;
    seen[e.u][col] = seen[e.v][col] = 1;
    listed.push_back(e);
  }
  std::sort(listed.begin(), listed.end());
  return std::adjacent_find(listed.begin(), listed.end()) == listed.end();
}

/// Exact chromatic index: edge-by-edge backtracking in canonical edge order,
/// new colours only in increasing order.
inline int brute_chromatic_index(const Graph& g) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (n > 10 && m > 25) fail(ErrorCode::UsageError, "brute_chromatic_index limited to n <= 10 or e <= 25");
  if (m == 0) return 0;
  const int top = g.max_degree();
  for (int k = top;; ++k) {
    if (static_cast<long long>(m) > static_cast<long long>(k) * (n / 2)) continue;
    std::vector<int> col(m, -1);
    std::vector<std::vector<char>> busy(n, std::vector<char>(k, 0));
    auto rec = [&](auto&& self, int i, int hi) -> bool {
      if (i == m) return true;
      const Edge e = edges[i];
      for (int c = 0; c <= std::min(k - 1, hi + 1); ++c) {
        if (busy[e.u][c] || busy[e.v][c]) continue;
        busy[e.u][c] = busy[e.v][c] = 1;
        if (self(self, i + 1, std::max(hi, c))) return true;
        busy[e.u][c] = busy[e.v][c] = 0;
      }
      return false;
    };
    if (rec(rec, 0, -1)) return k;
  }
}

struct ForestExtraction {
  std::vector<std::vector<VertexSequence>> forests;  // one spanning linear forest per matching
  Graph remainder;
};

/// Removes a spanning linkage for each matching in turn from what is left of g.
inline ForestExtraction extract_linear_forests(const Graph& g, const std::vector<std::vector<Edge>>& matchings,
                                               Rng& rng, const ColoringConfig& cfg = {}) {
  ForestExtraction out{{}, g};
  for (const auto& mi : matchings) {
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : mi) pairs.emplace_back(e.u, e.v);
    auto paths = spanning_linkage(out.remainder, PairList(pairs), rng, cfg.hamilton, cfg.linkage_attempts);
    for (const auto& p : paths)
      for (const Edge& e : sequence_edges(p, false)) out.remainder.remove_edge(e.u, e.v);
    out.forests.push_back(std::move(paths));
  }
  return out;
}

/// Delta-colouring of an even-order graph from linear forests whose leaves
/// follow a realization of the deficiencies, a regular remainder, an optional
/// perfect matching and a Hamilton decomposition. Class 2 by the deficiency
/// criterion gets the Vizing colouring.
inline EdgeColoring chromatic_index_color(const Graph& g, const QuasirandomParams& params, Rng& rng,
                                          const ColoringConfig& cfg = {}) {
  const int n = g.vertex_count();
  if (overfull_criterion(g) == ColorClass::Class2) return vizing_color(g);
  params.validate();
  const int top = g.max_degree();
  if (top - g.min_degree() > params.eta * n)
    fail(ErrorCode::HypothesisViolated, "degree spread exceeds eta*n");
  if (top == 0) return {};
  const auto defs = deficiencies(g);
  const Multigraph pos = hakimi_realize(defs.sorted());
  Multigraph aux(n);
  for (const auto& [e, k] : pos.multiplicities()) aux.add_edge(defs.order[e.u], defs.order[e.v], k);
  int cap = cfg.matching_cap > 0 ? cfg.matching_cap : std::max(1, static_cast<int>(std::floor(params.alpha * n / 6)));
  auto matchings = matching_partition_multigraph(aux, cap);
  // Adaptive: the smallest cap that keeps 2k <= Delta.
  while (cfg.matching_cap < 0 && 2 * static_cast<int>(matchings.size()) > top && cap < n / 2)
    matchings = matching_partition_multigraph(aux, ++cap);
  const int k = static_cast<int>(matchings.size());
  if (2 * k > top)
    fail(ErrorCode::RegularityMismatch,
         std::to_string(k) + " matchings leave no room below Delta = " + std::to_string(top));

  auto [forests, rest] = extract_linear_forests(g, matchings, rng, cfg);
  std::vector<int> forest_degree(n, 0);
  for (const auto& f : forests)
    for (const auto& p : f)
      for (const Edge& e : sequence_edges(p, false)) ++forest_degree[e.u], ++forest_degree[e.v];
  const int r = top - 2 * k;
  for (int x = 0; x < n; ++x)
    if (forest_degree[x] != 2 * k - defs.def[x] || rest.degree(x) != r)
      fail(ErrorCode::RegularityMismatch, "vertex " + std::to_string(x) + " has degree " +
                                              std::to_string(rest.degree(x)) + " after the forests, expected " +
                                              std::to_string(r));
  std::vector<Edge> star;
  if (r % 2 == 1) {
    star = perfect_matching_even_set(rest, rng, cfg.hamilton);
    for (const Edge& e : star) rest.remove_edge(e.u, e.v);
  }
  std::vector<std::vector<int>> cycles;
  if (rest.max_degree() > 0) cycles = hamilton_decompose(rest, rng, cfg.hamilton);

  detail::ColorState st(g, top);
  int next = 0;
  auto two_tone = [&](const VertexSequence& seq, bool closed) {
    const auto es = sequence_edges(seq, closed);
    for (std::size_t i = 0; i < es.size(); ++i) st.set(es[i].u, es[i].v, next + static_cast<int>(i % 2));
  };
  for (const auto& f : forests) {
    for (const auto& p : f) two_tone(p, false);
    next += 2;
  }
  for (const auto& c : cycles) {
    two_tone(c, true);
    next += 2;
  }
  for (const Edge& e : star) st.set(e.u, e.v, next);
  auto out = st.result();
  const int hub = defs.order.back();
  if (out.colors != top || g.degree(hub) != top || !is_proper_coloring(g, out))
    fail(ErrorCode::RegularityMismatch, "assembled colouring is not a proper Delta-colouring");
  return out;
}

enum class ColoringRoute { Construction, ConstructionAdaptiveCap, VizingClass2, KempeRepair, ExactSearch, Vizing };

inline const char* to_string(ColoringRoute r) {
  switch (r) {
    case ColoringRoute::Construction: return "construction";
    case ColoringRoute::ConstructionAdaptiveCap: return "construction-adaptive-cap";
    case ColoringRoute::VizingClass2: return "vizing-class2";
    case ColoringRoute::KempeRepair: return "kempe-repair";
    case ColoringRoute::ExactSearch: return "exact-search";
    case ColoringRoute::Vizing: return "vizing";
  }
  return "?";
}

struct ColoringReport {
  EdgeColoring coloring;
  int delta = 0;
  ColoringRoute route = ColoringRoute::Vizing;
  std::optional<ColorClass> criterion;  // empty for odd order
  std::string construction_error;       // why the construction was skipped or failed
  bool optimal = false;                 // colour count certified equal to the chromatic index
};

/// The construction where it applies, otherwise Vizing followed by attempts
/// to reach Delta colours. Delta colours are optimal; Delta+1 is certified by
/// the deficiency criterion, an overfull witness, or an exhausted exact search.
inline ColoringReport color_edges(const Graph& g, const QuasirandomParams& params, Rng& rng,
                                  const ColoringConfig& cfg = {}) {
  ColoringReport rep;
  rep.delta = g.max_degree();
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    rep.route = ColoringRoute::Construction;
    rep.optimal = true;
    if (n % 2 == 0) rep.criterion = ColorClass::Class1Candidate;
    return rep;
  }
  if (n % 2 == 0) {
    rep.criterion = overfull_criterion(g);
    if (*rep.criterion == ColorClass::Class2) {
      rep.coloring = vizing_color(g);
      rep.route = ColoringRoute::VizingClass2;
      rep.optimal = true;
      return rep;
    }
    try {
      rep.coloring = chromatic_index_color(g, params, rng, cfg);
      rep.route = ColoringRoute::Construction;
      rep.optimal = true;
      return rep;
    } catch (const Error& e) {
      rep.construction_error = e.what();
    }
    if (cfg.matching_cap == 0) {
      ColoringConfig wide = cfg;
      wide.matching_cap = -1;
      try {
        rep.coloring = chromatic_index_color(g, params, rng, wide);
        rep.route = ColoringRoute::ConstructionAdaptiveCap;
        rep.optimal = true;
        return rep;
      } catch (const Error& e) {
        rep.construction_error += std::string("; adaptive cap: ") + e.what();
      }
    }
  } else {
    rep.construction_error = "odd order";
  }
  const auto base = vizing_color(g);
  rep.coloring = base;
  rep.route = ColoringRoute::Vizing;
  if (base.colors <= rep.delta) {
    rep.optimal = true;
    return rep;
  }
  // An overfull subgraph settles Delta+1 before any search.
  if (n <= 14 && overfull_brute(g)) {
    rep.optimal = true;
    return rep;
  }
  for (int round = 0; round < cfg.repair_rounds; ++round) {
    detail::ColorState st(g, rep.delta + 1);
    for (const auto& [e, c] : base.color) st.set(e.u, e.v, c);
    if (detail::kempe_repair(st, g, rep.delta, rng, cfg.repair_steps_per_edge)) {
      rep.coloring = st.result();
      rep.route = ColoringRoute::KempeRepair;
      rep.optimal = true;
      return rep;
    }
  }
  if (static_cast<int>(g.edge_count()) <= cfg.exact_edge_limit && rep.delta < 64) {
    std::vector<int> assignment;
    auto s = detail::exact_coloring(g, rep.delta, cfg.exact_node_budget, assignment);
    if (s == detail::SearchStatus::Found) {
      const auto es = g.edges();
      rep.coloring = {0, {}};
      for (std::size_t i = 0; i < es.size(); ++i) {
        rep.coloring.color.emplace_back(es[i], assignment[i]);
        rep.coloring.colors = std::max(rep.coloring.colors, assignment[i] + 1);
      }
      rep.route = ColoringRoute::ExactSearch;
      rep.optimal = true;
      return rep;
    }
    if (s == detail::SearchStatus::None) {
      rep.route = ColoringRoute::ExactSearch;
      rep.optimal = true;
    }
  }
  return rep;
}

}  // namespace qdecomp
