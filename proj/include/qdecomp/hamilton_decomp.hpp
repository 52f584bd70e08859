#pragma once

#include <algorithm>
#include <type_traits>
#include <vector>

#include "qdecomp/cycle_classes.hpp"
#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/hamilton.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

namespace detail {

enum class ExactStatus { Found, None, Budget };

// Exhaustive Hamilton decomposition for small hosts. Every Hamilton cycle
// passes vertex 0, so cycles are enumerated from there.
template <class G>
class ExactDecomposer {
 public:
  ExactDecomposer(const G& g, long long budget) : g_(g), n_(g.vertex_count()), budget_(budget) {}

  ExactStatus run() { return solve(); }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }

 private:
  static constexpr bool kDirected = std::is_same_v<G, Digraph>;

  std::size_t links() const {
    if constexpr (kDirected) return g_.arc_count();
    else return g_.edge_count();
  }
  std::vector<int> next(int v) const {
    if constexpr (kDirected) return g_.out_neighbors(v);
    else return g_.neighbors(v);
  }
  bool linked(int a, int b) const {
    if constexpr (kDirected) return g_.has_arc(a, b);
    else return g_.has_edge(a, b);
  }
  void remove_cycle(const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if constexpr (kDirected) g_.remove_arc(c[i], c[(i + 1) % c.size()]);
      else g_.remove_edge(c[i], c[(i + 1) % c.size()]);
    }
  }
  void restore_cycle(const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if constexpr (kDirected) g_.add_arc(c[i], c[(i + 1) % c.size()]);
      else g_.add_edge(c[i], c[(i + 1) % c.size()]);
    }
  }

  ExactStatus solve() {
    if (links() == 0) return ExactStatus::Found;
    path_.assign(1, 0);
    used_.assign(n_, 0);
    used_[0] = 1;
    return dfs();
  }

  ExactStatus dfs() {
    if (--budget_ < 0) return ExactStatus::Budget;
    const int end = path_.back();
    if (static_cast<int>(path_.size()) == n_) {
      if (!linked(end, 0)) return ExactStatus::None;
      if (!kDirected && path_[1] > end) return ExactStatus::None;  // each undirected cycle once
      std::vector<int> cyc = path_;
      auto saved_used = used_;
      remove_cycle(cyc);
      cycles_.push_back(cyc);
      ExactStatus s = solve();
      if (s != ExactStatus::Found) {
        cycles_.pop_back();
        restore_cycle(cyc);
        path_ = cyc;
        used_ = std::move(saved_used);
      }
      return s;
    }
    for (int x : next(end)) {
      if (used_[x]) continue;
      used_[x] = 1;
      path_.push_back(x);
      ExactStatus s = dfs();
      if (s != ExactStatus::None) return s;
      path_.pop_back();
      used_[x] = 0;
    }
    return ExactStatus::None;
  }

  G g_;
  int n_;
  long long budget_;
  std::vector<int> path_;
  std::vector<char> used_;
  std::vector<std::vector<int>> cycles_;
};

inline bool cycles_decompose(const Graph& g, const std::vector<std::vector<int>>& cycles) {
  Graph seen(g.vertex_count());
  for (const auto& c : cycles) {
    if (!is_hamilton_cycle(g, c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (seen.has_edge(a, b)) return false;
      seen.add_edge(a, b);
    }
  }
  return seen.edge_count() == g.edge_count();
}

inline bool cycles_decompose(const Digraph& d, const std::vector<std::vector<int>>& cycles) {
  Digraph seen(d.vertex_count());
  for (const auto& c : cycles) {
    if (!is_hamilton_cycle(d, c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (seen.has_arc(a, b)) return false;
      seen.add_arc(a, b);
    }
  }
  return seen.arc_count() == d.arc_count();
}

// Splits a regular digraph into 1-factors, each given as its cycles.
inline std::vector<std::vector<std::vector<int>>> one_factorization(Digraph rem, Rng& rng) {
  const int n = rem.vertex_count();
  std::vector<std::vector<std::vector<int>>> out;
  while (rem.arc_count() > 0) {
    auto succ = random_cycle_cover(rem, rng);
    if (!succ) fail(ErrorCode::NotFound, "internal: regular digraph without a 1-factor");
    std::vector<std::vector<int>> factor;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
      if (seen[v] || (*succ)[v] < 0) continue;
      std::vector<int> cyc;
      for (int x = v; !seen[x]; x = (*succ)[x]) {
        seen[x] = 1;
        cyc.push_back(x);
      }
      factor.push_back(std::move(cyc));
    }
    for (int v = 0; v < n; ++v) rem.remove_arc(v, (*succ)[v]);
    out.push_back(std::move(factor));
  }
  return out;
}

inline bool switch_parity_ok(const std::vector<std::vector<std::vector<int>>>& classes) {
  std::size_t cycles = 0;
  for (const auto& c : classes) cycles += c.size();
  return cycles % 2 == classes.size() % 2;
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int x : g.neighbors(v))
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
        stack.push_back(x);
      }
  }
  return count == n;
}

}  // namespace detail

/// Splits an r-regular graph (r even) into r/2 Hamilton cycles.
///
/// Small hosts are searched exhaustively. Otherwise Hamilton cycles are peeled
/// off greedily (with bounded backtracking), the rest is split into 2-factors,
/// and label switches merge every class into a single spanning cycle.
inline std::vector<std::vector<int>> hamilton_decompose(const Graph& g, Rng& rng, const HamiltonConfig& cfg = {}) {
  const int n = g.vertex_count();
  require(n > 0, "hamilton_decompose on empty graph");
  require(is_regular(g) && g.max_degree() % 2 == 0, "hamilton_decompose needs an even-regular graph");
  const int r = g.max_degree();
  if (r == 0) return {};
  if (r == 2) {
    if (auto c = try_hamilton_cycle(g, rng, 1); c && detail::is_connected(g)) return {*c};
    fail(ErrorCode::NotFound, "2-regular graph is not a single cycle");
  }
  if (n <= cfg.exact_limit) {
    detail::ExactDecomposer<Graph> exact(g, cfg.exact_node_budget);
    auto s = exact.run();
    if (s == detail::ExactStatus::Found) return exact.cycles();
    if (s == detail::ExactStatus::None) fail(ErrorCode::NotFound, "graph has no Hamilton decomposition");
  }
  const int attempts = std::max(1, cfg.restarts / 10);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Graph rem = g;
    std::vector<std::vector<int>> cycles;
    int backtracks = 0;
    while (rem.degree(0) > 2) {
      if (auto c = try_hamilton_cycle(rem, rng, 3)) {
        for (const Edge& e : sequence_edges(*c, true)) rem.remove_edge(e.u, e.v);
        cycles.push_back(std::move(*c));
        continue;
      }
      if (backtracks < cfg.backtrack_depth && !cycles.empty()) {
        for (const Edge& e : sequence_edges(cycles.back(), true)) rem.add_edge(e.u, e.v);
        cycles.pop_back();
        ++backtracks;
        continue;
      }
      break;
    }
    std::vector<std::vector<std::vector<int>>> classes;
    for (auto& c : cycles) classes.push_back({c});
    for (auto& f : two_factorization(rem)) classes.push_back(std::move(f));
    CycleClassSystem sys(n, classes);
    if (!sys.merge(rng, static_cast<long long>(cfg.merge_moves_per_vertex) * n)) continue;
    std::vector<std::vector<int>> out;
    for (int i = 0; i < sys.class_count(); ++i) out.push_back(sys.cycles(i).front());
    if (detail::cycles_decompose(g, out)) return out;
  }
  fail(ErrorCode::NotFound, "Hamilton decomposition search exhausted its budget");
}

/// Splits an r-regular digraph (d+ = d- = r) into r directed Hamilton cycles.
inline std::vector<std::vector<int>> hamilton_decompose_digraph(const Digraph& d, Rng& rng,
                                                                const HamiltonConfig& cfg = {}) {
  const int n = d.vertex_count();
  require(n > 0, "hamilton_decompose_digraph on empty digraph");
  const int r = d.out_degree(0);
  for (int v = 0; v < n; ++v)
    require(d.out_degree(v) == r && d.in_degree(v) == r, "hamilton_decompose_digraph needs a regular digraph");
  if (r == 0) return {};
  if (n <= cfg.exact_limit) {
    detail::ExactDecomposer<Digraph> exact(d, cfg.exact_node_budget);
    auto s = exact.run();
    if (s == detail::ExactStatus::Found) return exact.cycles();
    if (s == detail::ExactStatus::None) fail(ErrorCode::NotFound, "digraph has no Hamilton decomposition");
  }
  const int attempts = std::max(1, cfg.restarts / 10);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Digraph rem = d;
    std::vector<std::vector<int>> cycles;
    int backtracks = 0;
    while (rem.out_degree(0) > 1) {
      if (auto c = try_hamilton_cycle(rem, rng, 3)) {
        for (const Arc& a : sequence_arcs(*c)) rem.remove_arc(a.from, a.to);
        cycles.push_back(std::move(*c));
        continue;
      }
      if (backtracks < cfg.backtrack_depth && !cycles.empty()) {
        for (const Arc& a : sequence_arcs(cycles.back())) rem.add_arc(a.from, a.to);
        cycles.pop_back();
        ++backtracks;
        continue;
      }
      break;
    }
    // Switches between two classes flip the permutation sign of both, so the
    // parity of the total cycle count is invariant; all-Hamilton needs it to
    // equal the class count. Redraw the 1-factorization until it does.
    std::vector<std::vector<std::vector<int>>> classes;
    for (int fix = 0; fix < 40; ++fix) {
      classes.clear();
      for (auto& c : cycles) classes.push_back({c});
      for (auto& f : detail::one_factorization(rem, rng)) classes.push_back(std::move(f));
      if (detail::switch_parity_ok(classes)) break;
      if (rem.out_degree(0) <= 1 && !cycles.empty()) {
        for (const Arc& a : sequence_arcs(cycles.back())) rem.add_arc(a.from, a.to);
        cycles.pop_back();
      }
    }
    DiCycleClassSystem sys(n, classes);
    if (!sys.merge(rng, static_cast<long long>(cfg.merge_moves_per_vertex) * n)) continue;
    std::vector<std::vector<int>> out;
    for (int i = 0; i < sys.class_count(); ++i) out.push_back(sys.cycles(i).front());
    if (detail::cycles_decompose(d, out)) return out;
  }
  fail(ErrorCode::NotFound, "directed Hamilton decomposition search exhausted its budget");
}

}  // namespace qdecomp
