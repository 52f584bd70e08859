#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdecomp/errors.hpp"

namespace qdecomp {

// Unordered vertex pair stored with the smaller endpoint first.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  int other(int x) const { return x == u ? v : u; }
  bool touches(int x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Ordered vertex pair.
struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {

inline void erase_value(std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  *it = v.back();
  v.pop_back();
}

}  // namespace detail

/// Simple undirected graph on vertices 0..n-1.
///
/// Keeps both an adjacency matrix (O(1) edge tests) and neighbour lists. The
/// order of a neighbour list depends on the insertion/removal history but is
/// deterministic, which is all the seeded algorithms need.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {
    require(n >= 0, "negative vertex count");
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[index(u, v)] != 0;
  }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      fail(ErrorCode::UsageError, "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    if (u == v) fail(ErrorCode::UsageError, "self-loop at " + std::to_string(u));
    if (has_edge(u, v)) fail(ErrorCode::UsageError, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++m_;
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v))
      fail(ErrorCode::UsageError, "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    adj_[index(u, v)] = adj_[index(v, u)] = 0;
    detail::erase_value(nbrs_[u], v);
    detail::erase_value(nbrs_[v], u);
    --m_;
  }

  /// Appends an isolated vertex and returns its id.
  int add_vertex() {
    Graph g(n_ + 1);
    for (const Edge& e : edges()) g.add_edge(e.u, e.v);
    *this = std::move(g);
    return n_ - 1;
  }

  /// Canonical sorted edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_[index(u, v)]) out.emplace_back(u, v);
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
};

/// Loopless digraph; both orientations of a pair may be present.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n)
      : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), out_(n), in_(n) {
    require(n >= 0, "negative vertex count");
  }
  Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) add_arc(a.from, a.to);
  }

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return m_; }

  bool has_arc(int u, int v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[index(u, v)] != 0;
  }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  int degree(int v) const { return out_degree(v) + in_degree(v); }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

  void add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      fail(ErrorCode::UsageError, "arc " + std::to_string(u) + "->" + std::to_string(v) + " out of range");
    if (u == v) fail(ErrorCode::UsageError, "self-loop at " + std::to_string(u));
    if (has_arc(u, v)) fail(ErrorCode::UsageError, "duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
    adj_[index(u, v)] = 1;
    out_[u].push_back(v);
    in_[v].push_back(u);
    ++m_;
  }

  void remove_arc(int u, int v) {
    if (!has_arc(u, v))
      fail(ErrorCode::UsageError, "arc " + std::to_string(u) + "->" + std::to_string(v) + " not present");
    adj_[index(u, v)] = 0;
    detail::erase_value(out_[u], v);
    detail::erase_value(in_[v], u);
    --m_;
  }

  int add_vertex() {
    Digraph d(n_ + 1);
    for (const Arc& a : arcs()) d.add_arc(a.from, a.to);
    *this = std::move(d);
    return n_ - 1;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (adj_[index(u, v)]) out.push_back({u, v});
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = 2 * n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  /// Minimum semidegree.
  int min_semidegree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min({d, out_degree(v), in_degree(v)});
    return d;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Loopless multigraph as an edge multiset.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n), deg_(n, 0) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  int degree(int v) const { return deg_[v]; }
  int multiplicity(int u, int v) const {
    auto it = mult_.find(Edge(u, v));
    return it == mult_.end() ? 0 : it->second;
  }

  void add_edge(int u, int v, int count = 1) {
    require(u >= 0 && v >= 0 && u < n_ && v < n_ && u != v, "bad multigraph edge");
    require(count >= 1, "multiplicity must be positive");
    mult_[Edge(u, v)] += count;
    deg_[u] += count;
    deg_[v] += count;
    m_ += count;
  }

  /// Distinct pairs with their multiplicities, in canonical order.
  const std::map<Edge, int>& multiplicities() const { return mult_; }

  /// Every parallel copy listed separately, canonical order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (const auto& [e, k] : mult_)
      for (int i = 0; i < k; ++i) out.push_back(e);
    return out;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<int> deg_;
  std::map<Edge, int> mult_;
};

/// Pairwise disjoint vertex pairs (x_i, y_i). Pairs need not be edges of any
/// graph. When built with `ordered_by`, each pair satisfies d(x_i) <= d(y_i)
/// for the supplied degrees, which is the orientation "consistent with M"
/// refers to.
class PairList {
 public:
  PairList() = default;
  explicit PairList(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {}

  static PairList ordered_by(std::vector<std::pair<int, int>> pairs, std::span<const int> degrees) {
    for (auto& [x, y] : pairs)
      if (degrees[x] > degrees[y]) std::swap(x, y);
    return PairList(std::move(pairs));
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  /// Throws UsageError unless all endpoints are distinct vertices below n.
  void validate(int n) const {
    std::vector<char> seen(n, 0);
    for (auto [x, y] : pairs_) {
      require(x >= 0 && y >= 0 && x < n && y < n, "pair endpoint out of range");
      require(x != y, "degenerate pair");
      require(!seen[x] && !seen[y], "pairs are not disjoint");
      seen[x] = seen[y] = 1;
    }
  }

  /// Partner of each vertex, or -1.
  std::vector<int> partner_map(int n) const {
    std::vector<int> partner(n, -1);
    for (auto [x, y] : pairs_) {
      partner[x] = y;
      partner[y] = x;
    }
    return partner;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

struct DegreeProfile {
  int max_degree = 0;
  int min_degree = 0;
  int odd_count = 0;
  std::vector<int> odd_set;
  std::vector<int> max_degree_vertices;
};

template <class G>
std::vector<int> degree_vector(const G& g) {
  std::vector<int> d(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

template <class G>
DegreeProfile degree_profile(const G& g) {
  DegreeProfile p;
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) p.odd_set.push_back(v);
    if (g.degree(v) == p.max_degree) p.max_degree_vertices.push_back(v);
  }
  p.odd_count = static_cast<int>(p.odd_set.size());
  return p;
}

/// All degrees even. Connectivity is not part of the definition.
inline bool is_eulerian(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

inline bool is_eulerian(const Digraph& d) {
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.in_degree(v) != d.out_degree(v)) return false;
  return true;
}

inline bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

inline Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  Graph out = g;
  for (const Edge& e : edges) out.remove_edge(e.u, e.v);
  return out;
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

/// Induced subgraph relabelled to 0..k-1, with the map back to host ids.
struct Induced {
  Graph graph;
  std::vector<int> to_host;
};

inline Induced induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(vertices[i] >= 0 && vertices[i] < g.vertex_count(), "vertex out of range");
    require(local[vertices[i]] < 0, "repeated vertex in induced_subgraph");
    local[vertices[i]] = static_cast<int>(i);
  }
  Induced out{Graph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}};
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (local[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), local[w]);
  return out;
}

struct InducedDigraph {
  Digraph graph;
  std::vector<int> to_host;
};

inline InducedDigraph induced_subgraph(const Digraph& d, std::span<const int> vertices) {
  std::vector<int> local(d.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(local[vertices[i]] < 0, "repeated vertex in induced_subgraph");
    local[vertices[i]] = static_cast<int>(i);
  }
  InducedDigraph out{Digraph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}};
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : d.out_neighbors(vertices[i]))
      if (local[w] >= 0) out.graph.add_arc(static_cast<int>(i), local[w]);
  return out;
}

/// Replaces every edge by two opposite arcs.
inline Digraph symmetric_digraph(const Graph& g) {
  Digraph d(g.vertex_count());
  for (const Edge& e : g.edges()) {
    d.add_arc(e.u, e.v);
    d.add_arc(e.v, e.u);
  }
  return d;
}

/// Underlying simple graph; throws if both orientations of a pair occur.
inline Graph underlying_graph(const Digraph& d) {
  Graph g(d.vertex_count());
  for (const Arc& a : d.arcs()) g.add_edge(a.from, a.to);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Digraph complete_digraph(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

/// Edges u,v of a closed vertex sequence (cycle) or open one (path).
inline std::vector<Edge> sequence_edges(std::span<const int> seq, bool closed) {
  std::vector<Edge> out;
  if (seq.size() < 2) return out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.emplace_back(seq[i], seq[i + 1]);
  if (closed && seq.size() > 2) out.emplace_back(seq.back(), seq.front());
  return out;
}

inline std::vector<Arc> sequence_arcs(std::span<const int> seq) {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < seq.size(); ++i) out.push_back({seq[i], seq[(i + 1) % seq.size()]});
  return out;
}

}  // namespace qdecomp
