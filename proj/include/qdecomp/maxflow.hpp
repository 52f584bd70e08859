#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace qdecomp {

/// Dinic's algorithm on integer capacities. Flows are integral.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n), level_(n), it_(n) {}

  int add_edge(int from, int to, long long cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap});
    edges_.push_back({from, 0});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
  }

  long long flow_on(int edge_id) const { return edges_[edge_id ^ 1].cap; }

 private:
  struct E {
    int to;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : adj_[v]) {
        if (edges_[id].cap > 0 && level_[edges_[id].to] < 0) {
          level_[edges_[id].to] = level_[v] + 1;
          q.push(edges_[id].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      int id = adj_[v][i];
      E& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      if (long long d = dfs(e.to, t, std::min(f, e.cap))) {
        e.cap -= d;
        edges_[id ^ 1].cap += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<E> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_, it_;
};

}  // namespace qdecomp
