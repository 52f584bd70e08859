#include <gtest/gtest.h>

#include <set>

#include "qdecomp/hamilton.hpp"
#include "qdecomp/hamilton_decomp.hpp"
#include "qdecomp/randgen.hpp"

using namespace qdecomp;

namespace {

bool spans_cycle(const Graph& g, const std::vector<int>& c) {
  std::set<int> vs(c.begin(), c.end());
  if (static_cast<int>(vs.size()) != g.vertex_count() || c.size() != vs.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

bool spans_dicycle(const Digraph& d, const std::vector<int>& c) {
  std::set<int> vs(c.begin(), c.end());
  if (static_cast<int>(vs.size()) != d.vertex_count() || c.size() != vs.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!d.has_arc(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

bool spans_path(const Graph& g, const std::vector<int>& p, int a, int b) {
  std::set<int> vs(p.begin(), p.end());
  if (static_cast<int>(vs.size()) != g.vertex_count() || p.size() != vs.size()) return false;
  if (p.front() != a || p.back() != b) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

// Every edge used exactly once by the closed sequences.
bool partitions_edges(const Graph& g, const std::vector<std::vector<int>>& cycles) {
  std::multiset<std::pair<int, int>> used;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      used.insert({std::min(a, b), std::max(a, b)});
    }
  std::multiset<std::pair<int, int>> want;
  for (const Edge& e : g.edges()) want.insert({e.u, e.v});
  return used == want;
}

bool partitions_arcs(const Digraph& d, const std::vector<std::vector<int>>& cycles) {
  std::multiset<std::pair<int, int>> used;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) used.insert({c[i], c[(i + 1) % c.size()]});
  std::multiset<std::pair<int, int>> want;
  for (const Arc& a : d.arcs()) want.insert({a.from, a.to});
  return used == want;
}

Graph circulant(int n, std::initializer_list<int> jumps) {
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int j : jumps)
      if (!g.has_edge(v, (v + j) % n)) g.add_edge(v, (v + j) % n);
  return g;
}

// All Hamilton paths between a and b, by brute force over permutations.
int count_hamilton_paths(const Graph& g, int a, int b) {
  std::vector<int> mid;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != a && v != b) mid.push_back(v);
  int count = 0;
  do {
    std::vector<int> p{a};
    p.insert(p.end(), mid.begin(), mid.end());
    p.push_back(b);
    count += spans_path(g, p, a, b);
  } while (std::next_permutation(mid.begin(), mid.end()));
  return count;
}

}  // namespace

TEST(HamiltonCycle, SmallExamples) {
  Rng rng(1);
  auto k4 = hamilton_cycle(complete_graph(4), rng);
  EXPECT_EQ(k4.size(), 4u);
  EXPECT_TRUE(spans_cycle(complete_graph(4), k4));
  auto c7 = hamilton_cycle(cycle_graph(7), rng);
  EXPECT_TRUE(spans_cycle(cycle_graph(7), c7));
}

TEST(HamiltonCycle, RandomGraph) {
  Rng rng(11);
  auto g = gen_gnp(50, 0.5, 11);
  auto c = hamilton_cycle(g, rng);
  EXPECT_TRUE(spans_cycle(g, c));
}

TEST(HamiltonCycle, ManyRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    auto g = gen_gnp(30 + static_cast<int>(seed), 0.3 + 0.01 * static_cast<double>(seed), seed);
    if (g.min_degree() < 2) continue;
    auto c = hamilton_cycle(g, rng);
    EXPECT_TRUE(spans_cycle(g, c)) << seed;
  }
}

TEST(HamiltonCycle, ReportsFailure) {
  Rng rng(3);
  try {
    hamilton_cycle(path_graph(5), rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
  // Petersen graph: no Hamilton cycle.
  Graph pet(10);
  for (int i = 0; i < 5; ++i) {
    pet.add_edge(i, (i + 1) % 5);
    pet.add_edge(i, i + 5);
    pet.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_THROW(hamilton_cycle(pet, rng, {.restarts = 5}), Error);
  EXPECT_THROW(hamilton_cycle(Graph(0), rng), Error);
}

TEST(HamiltonCycle, Directed) {
  Rng rng(2);
  Digraph tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  EXPECT_EQ(hamilton_cycle(tri, rng), (std::vector<int>{0, 1, 2}));
  auto sym = symmetric_digraph(gen_gnp(40, 0.4, 8));
  EXPECT_TRUE(spans_dicycle(sym, hamilton_cycle(sym, rng)));
  // A random orientation of a dense graph.
  auto g = gen_gnp(40, 0.8, 5);
  Digraph d(40);
  Rng orient(5);
  for (const Edge& e : g.edges()) coin_flip(orient) ? d.add_arc(e.u, e.v) : d.add_arc(e.v, e.u);
  if (d.min_semidegree() > 0) {
    EXPECT_TRUE(spans_dicycle(d, hamilton_cycle(d, rng)));
  }
}

TEST(HamiltonPath, CompleteGraph) {
  Rng rng(4);
  auto p = hamilton_path(complete_graph(4), 0, 3, rng);
  EXPECT_TRUE(spans_path(complete_graph(4), p, 0, 3));
}

TEST(HamiltonPath, FourCycleAdjacentEnds) {
  Rng rng(5);
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(count_hamilton_paths(c4, 0, 1), 1);
  EXPECT_EQ(count_hamilton_paths(c4, 0, 2), 0);
  EXPECT_EQ(hamilton_path(c4, 0, 1, rng), (std::vector<int>{0, 3, 2, 1}));
  EXPECT_EQ(hamilton_path_via_contraction(c4, 0, 1, rng), (std::vector<int>{0, 3, 2, 1}));
  EXPECT_THROW(hamilton_path(c4, 0, 2, rng, {.restarts = 3}), Error);
  EXPECT_THROW(hamilton_path_via_contraction(c4, 0, 2, rng, {.restarts = 3}), Error);
}

TEST(HamiltonPath, RandomGraphBothRoutes) {
  Rng rng(2);
  auto g = gen_gnp(40, 0.4, 2);
  EXPECT_TRUE(spans_path(g, hamilton_path(g, 0, 1, rng), 0, 1));
  EXPECT_TRUE(spans_path(g, hamilton_path_via_contraction(g, 0, 1, rng), 0, 1));
}

TEST(HamiltonPath, RoutesAgreeOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = gen_gnp(7, 0.55, seed);
    Rng rng(seed);
    const bool exists = count_hamilton_paths(g, 0, 6) > 0;
    bool direct = true, contracted = true;
    try {
      EXPECT_TRUE(spans_path(g, hamilton_path(g, 0, 6, rng), 0, 6));
    } catch (const Error&) {
      direct = false;
    }
    try {
      EXPECT_TRUE(spans_path(g, hamilton_path_via_contraction(g, 0, 6, rng), 0, 6));
    } catch (const Error&) {
      contracted = false;
    }
    EXPECT_EQ(direct, exists) << seed;
    EXPECT_EQ(contracted, exists) << seed;
  }
}

TEST(PerfectMatching, Examples) {
  Rng rng(6);
  auto m6 = perfect_matching_even_set(cycle_graph(6), rng);
  EXPECT_EQ(m6.size(), 3u);
  for (const Edge& e : m6) EXPECT_TRUE(cycle_graph(6).has_edge(e.u, e.v));
  auto m4 = perfect_matching_even_set(complete_graph(4), rng);
  std::set<int> cover;
  for (const Edge& e : m4) cover.insert({e.u, e.v});
  EXPECT_EQ(cover.size(), 4u);
  EXPECT_THROW(perfect_matching_even_set(complete_graph(3), rng), Error);
  EXPECT_THROW(perfect_matching_even_set(Graph(4), rng), Error);
}

TEST(PerfectMatching, OddDegreeSetOfRandomGraph) {
  Rng rng(5);
  auto g = gen_gnp(30, 0.5, 5);
  auto prof = degree_profile(g);
  auto ind = induced_subgraph(g, prof.odd_set);
  auto m = perfect_matching_even_set(ind.graph, rng);
  std::vector<int> hit(ind.graph.vertex_count(), 0);
  for (const Edge& e : m) {
    EXPECT_TRUE(ind.graph.has_edge(e.u, e.v));
    ++hit[e.u];
    ++hit[e.v];
  }
  for (int h : hit) EXPECT_EQ(h, 1);
}

TEST(PerfectMatching, FallsBackWhenNoHamiltonCycle) {
  // Two disjoint edges: no Hamilton cycle, but a perfect matching.
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  Rng rng(1);
  EXPECT_EQ(perfect_matching_even_set(g, rng).size(), 2u);
}

TEST(TwoFactorization, Examples) {
  auto c8 = two_factorization(cycle_graph(8));
  ASSERT_EQ(c8.size(), 1u);
  ASSERT_EQ(c8[0].size(), 1u);
  EXPECT_EQ(c8[0][0].size(), 8u);

  auto k5 = two_factorization(complete_graph(5));
  ASSERT_EQ(k5.size(), 2u);
  std::vector<std::vector<int>> all;
  for (const auto& f : k5) {
    int covered = 0;
    for (const auto& c : f) {
      covered += static_cast<int>(c.size());
      all.push_back(c);
    }
    EXPECT_EQ(covered, 5);
  }
  EXPECT_TRUE(partitions_edges(complete_graph(5), all));

  Graph k4m(4);
  k4m.add_edge(0, 1);
  k4m.add_edge(1, 2);
  k4m.add_edge(2, 3);
  k4m.add_edge(3, 0);
  auto f = two_factorization(k4m);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(partitions_edges(k4m, f[0]));
}

TEST(TwoFactorization, DisconnectedAndLarge) {
  Graph two(6);
  for (int b : {0, 3}) {
    two.add_edge(b, b + 1);
    two.add_edge(b + 1, b + 2);
    two.add_edge(b, b + 2);
  }
  auto f = two_factorization(two);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].size(), 2u);
  auto g = circulant(31, {1, 2, 5, 9, 13});
  auto fs = two_factorization(g);
  ASSERT_EQ(fs.size(), 5u);
  std::vector<std::vector<int>> all;
  for (const auto& x : fs)
    for (const auto& c : x) {
      EXPECT_GE(c.size(), 3u);
      all.push_back(c);
    }
  EXPECT_TRUE(partitions_edges(g, all));
}

TEST(HamiltonDecompose, SmallCompleteGraphs) {
  Rng rng(7);
  auto c5 = hamilton_decompose(cycle_graph(5), rng);
  ASSERT_EQ(c5.size(), 1u);
  for (int n : {5, 7, 9}) {
    auto g = complete_graph(n);
    auto d = hamilton_decompose(g, rng);
    EXPECT_EQ(static_cast<int>(d.size()), (n - 1) / 2);
    for (const auto& c : d) EXPECT_TRUE(spans_cycle(g, c));
    EXPECT_TRUE(partitions_edges(g, d));
  }
}

TEST(HamiltonDecompose, ExhaustiveSearchDetectsImpossibility) {
  Rng rng(1);
  Graph two(6);
  for (int b : {0, 3}) {
    two.add_edge(b, b + 1);
    two.add_edge(b + 1, b + 2);
    two.add_edge(b, b + 2);
  }
  EXPECT_THROW(hamilton_decompose(two, rng), Error);
  EXPECT_THROW(hamilton_decompose(complete_graph(4), rng), Error);  // odd degree
}

TEST(HamiltonDecompose, HeuristicOnLargerHosts) {
  Rng rng(9);
  std::vector<Graph> hosts{complete_graph(21), circulant(40, {1, 3, 7, 12}), circulant(61, {2, 5, 6, 11, 17, 23, 29})};
  for (const auto& g : hosts) {
    auto d = hamilton_decompose(g, rng);
    EXPECT_EQ(static_cast<int>(d.size()), g.max_degree() / 2);
    for (const auto& c : d) EXPECT_TRUE(spans_cycle(g, c));
    EXPECT_TRUE(partitions_edges(g, d));
  }
}

TEST(HamiltonDecompose, RemainderIsRegularAfterEachPart) {
  Rng rng(12);
  auto g = circulant(30, {1, 4, 9});
  auto d = hamilton_decompose(g, rng);
  Graph rem = g;
  int r = g.max_degree();
  for (const auto& c : d) {
    for (const Edge& e : sequence_edges(c, true)) rem.remove_edge(e.u, e.v);
    r -= 2;
    EXPECT_TRUE(is_regular(rem));
    EXPECT_EQ(rem.max_degree(), r);
  }
  EXPECT_EQ(rem.edge_count(), 0u);
}

TEST(HamiltonDecompose, Deterministic) {
  auto g = circulant(35, {1, 2, 8});
  Rng a(77), b(77);
  EXPECT_EQ(hamilton_decompose(g, a), hamilton_decompose(g, b));
}

TEST(HamiltonDecomposeDigraph, Examples) {
  Rng rng(8);
  Digraph tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  auto t = hamilton_decompose_digraph(tri, rng);
  ASSERT_EQ(t.size(), 1u);

  auto k3 = complete_digraph(3);
  auto d3 = hamilton_decompose_digraph(k3, rng);
  ASSERT_EQ(d3.size(), 2u);
  EXPECT_TRUE(partitions_arcs(k3, d3));

  auto k5 = symmetric_digraph(complete_graph(5));
  auto d5 = hamilton_decompose_digraph(k5, rng);
  ASSERT_EQ(d5.size(), 4u);
  for (const auto& c : d5) EXPECT_TRUE(spans_dicycle(k5, c));
  EXPECT_TRUE(partitions_arcs(k5, d5));
}

TEST(HamiltonDecomposeDigraph, LargerHosts) {
  Rng rng(10);
  std::vector<Digraph> hosts{complete_digraph(12), symmetric_digraph(circulant(25, {1, 3, 8}))};
  for (const auto& d : hosts) {
    auto parts = hamilton_decompose_digraph(d, rng);
    EXPECT_EQ(static_cast<int>(parts.size()), d.out_degree(0));
    for (const auto& c : parts) EXPECT_TRUE(spans_dicycle(d, c));
    EXPECT_TRUE(partitions_arcs(d, parts));
  }
}

TEST(CycleClasses, MergeTwoFactorsOfCompleteGraph) {
  auto g = complete_graph(13);
  auto factors = two_factorization(g);
  CycleClassSystem sys(13, factors);
  Rng rng(3);
  ASSERT_TRUE(sys.merge(rng, 10000));
  std::vector<std::vector<int>> all;
  for (int i = 0; i < sys.class_count(); ++i) {
    ASSERT_EQ(sys.component_count(i), 1);
    all.push_back(sys.cycles(i).front());
  }
  EXPECT_TRUE(partitions_edges(g, all));
}

TEST(CycleClasses, SupportsArePreserved) {
  // Two classes on vertex set {0..5}: two triangles, and the 6-cycle 0-3-1-4-2-5.
  std::vector<std::vector<std::vector<int>>> classes{{{0, 1, 2}, {3, 4, 5}}, {{0, 3, 1, 4, 2, 5}}};
  CycleClassSystem sys(7, classes);
  Rng rng(1);
  sys.merge(rng, 100);
  for (int i = 0; i < 2; ++i) {
    std::set<int> vs;
    for (const auto& c : sys.cycles(i)) vs.insert(c.begin(), c.end());
    EXPECT_EQ(vs, (std::set<int>{0, 1, 2, 3, 4, 5}));
  }
}
