#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "qdecomp/graph.hpp"

namespace qdecomp {

/// Hopcroft-Karp on a bipartite graph given as left-side adjacency lists.
/// Result: match_left[u] = right vertex or -1.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right, std::vector<std::vector<int>> adj)
      : left_(left), right_(right), adj_(std::move(adj)) {}

  std::vector<int> solve() {
    match_l_.assign(left_, -1);
    match_r_.assign(right_, -1);
    dist_.assign(left_, 0);
    while (bfs()) {
      for (int u = 0; u < left_; ++u)
        if (match_l_[u] < 0) dfs(u);
    }
    return match_l_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < left_; ++u) {
      if (match_l_[u] < 0) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        int w = match_r_[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  // Iterative would be nicer; recursion depth is bounded by the left side size.
  bool dfs(int u) {
    for (int v : adj_[u]) {
      int w = match_r_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  int left_, right_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_, match_r_, dist_;
};

/// Maximum cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(n^3)). Returns mate[v] or -1.
inline std::vector<int> maximum_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> mate(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (mate[a] < 0) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[mate[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] >= 0 && parent[mate[to]] >= 0)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (mate[to] < 0) return to;
          used[mate[to]] = 1;
          q.push(mate[to]);
        }
      }
    }
    return -1;
  };

  // Greedy start.
  for (int v = 0; v < n; ++v)
    if (mate[v] < 0)
      for (int w : g.neighbors(v))
        if (mate[w] < 0) {
          mate[v] = w;
          mate[w] = v;
          break;
        }
  for (int v = 0; v < n; ++v) {
    if (mate[v] >= 0) continue;
    int end = find_path(v);
    while (end >= 0) {
      int pv = parent[end], ppv = mate[pv];
      mate[end] = pv;
      mate[pv] = end;
      end = ppv;
    }
  }
  return mate;
}

inline std::vector<Edge> matching_edges(const std::vector<int>& mate) {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

}  // namespace qdecomp
