#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "qdecomp/graph.hpp"
#include "qdecomp/randgen.hpp"

namespace testsupport {

using qdecomp::Arc;
using qdecomp::Digraph;
using qdecomp::Edge;
using qdecomp::Graph;

// G(n,p) with odd vertices paired off by toggling the edge between them.
inline Graph even_gnp(int n, double p, std::uint64_t seed) {
  Graph g = qdecomp::gen_gnp(n, p, seed);
  std::vector<int> odd = qdecomp::degree_profile(g).odd_set;
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    if (g.has_edge(odd[i], odd[i + 1])) g.remove_edge(odd[i], odd[i + 1]);
    else g.add_edge(odd[i], odd[i + 1]);
  }
  return g;
}

inline bool is_simple_cycle(const Graph& g, const std::vector<int>& c) {
  if (c.size() < 3 || std::set<int>(c.begin(), c.end()).size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

inline bool is_simple_dicycle(const Digraph& d, const std::vector<int>& c) {
  if (c.size() < 2 || std::set<int>(c.begin(), c.end()).size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!d.has_arc(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

// Each edge of g covered exactly once by the closed walks plus extra edges.
inline bool covers_exactly(const Graph& g, const std::vector<std::vector<int>>& cycles,
                           const std::vector<Edge>& extra = {}) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      Edge e(c[i], c[(i + 1) % c.size()]);
      ++count[{e.u, e.v}];
    }
  for (const Edge& e : extra) ++count[{e.u, e.v}];
  if (count.size() != g.edge_count()) return false;
  for (auto [e, k] : count)
    if (k != 1 || !g.has_edge(e.first, e.second)) return false;
  return true;
}

inline bool covers_exactly(const Digraph& d, const std::vector<std::vector<int>>& cycles) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) ++count[{c[i], c[(i + 1) % c.size()]}];
  if (count.size() != d.arc_count()) return false;
  for (auto [a, k] : count)
    if (k != 1 || !d.has_arc(a.first, a.second)) return false;
  return true;
}

// x on a cycle forces y on it whenever deg(x) <= deg(y); both ways on ties.
inline bool consistent(const std::vector<std::vector<int>>& cycles, const std::vector<std::pair<int, int>>& pairs,
                       const std::vector<int>& deg) {
  for (const auto& c : cycles) {
    std::set<int> on(c.begin(), c.end());
    for (auto [x, y] : pairs) {
      if (deg[x] <= deg[y] && on.count(x) && !on.count(y)) return false;
      if (deg[y] <= deg[x] && on.count(y) && !on.count(x)) return false;
    }
  }
  return true;
}

}  // namespace testsupport
