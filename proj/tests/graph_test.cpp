#include <gtest/gtest.h>

#include "qdecomp/decomposition.hpp"
#include "qdecomp/graph.hpp"

using namespace qdecomp;

TEST(DegreeProfile, CompleteGraphK4) {
  auto p = degree_profile(complete_graph(4));
  EXPECT_EQ(p.max_degree, 3);
  EXPECT_EQ(p.min_degree, 3);
  EXPECT_EQ(p.odd_count, 4);
  EXPECT_EQ(p.odd_set, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(p.max_degree_vertices.size(), 4u);
}

TEST(DegreeProfile, FiveCycle) {
  auto p = degree_profile(cycle_graph(5));
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.min_degree, 2);
  EXPECT_EQ(p.odd_count, 0);
  EXPECT_TRUE(p.odd_set.empty());
}

TEST(DegreeProfile, ThreeVertexPath) {
  auto p = degree_profile(path_graph(3));
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.min_degree, 1);
  EXPECT_EQ(p.odd_count, 2);
  EXPECT_EQ(p.odd_set, (std::vector<int>{0, 2}));
  EXPECT_EQ(p.max_degree_vertices, (std::vector<int>{1}));
}

TEST(Eulerian, Examples) {
  EXPECT_TRUE(is_eulerian(cycle_graph(6)));
  EXPECT_FALSE(is_eulerian(complete_graph(4)));
  Digraph tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  EXPECT_TRUE(is_eulerian(tri));
  tri.remove_arc(2, 0);
  EXPECT_FALSE(is_eulerian(tri));
  // Two disjoint triangles: even degrees, disconnected.
  Graph two(6);
  for (int b : {0, 3}) {
    two.add_edge(b, b + 1);
    two.add_edge(b + 1, b + 2);
    two.add_edge(b, b + 2);
  }
  EXPECT_TRUE(is_eulerian(two));
}

TEST(GraphOps, ComplementOfFourCycle) {
  Graph c = complement(cycle_graph(4));
  EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_TRUE(c.has_edge(0, 2));
  EXPECT_TRUE(c.has_edge(1, 3));
}

TEST(GraphOps, RemoveEdgeFromK4) {
  std::vector<Edge> gone{{0, 1}};
  Graph g = remove_edges(complete_graph(4), gone);
  EXPECT_EQ(degree_vector(g), (std::vector<int>{2, 2, 3, 3}));
}

TEST(GraphOps, RemovingAbsentEdgeThrows) {
  Graph g = cycle_graph(4);
  EXPECT_THROW(g.remove_edge(0, 2), Error);
  EXPECT_THROW(g.add_edge(0, 1), Error);
  EXPECT_THROW(g.add_edge(2, 2), Error);
}

TEST(GraphOps, InducedTriangleOfK5) {
  std::vector<int> vs{1, 3, 4};
  auto ind = induced_subgraph(complete_graph(5), vs);
  EXPECT_EQ(ind.graph, complete_graph(3));
  EXPECT_EQ(ind.to_host, vs);
}

TEST(GraphOps, DoubleComplementIsIdentity) {
  Graph g(7);
  g.add_edge(0, 3);
  g.add_edge(2, 5);
  g.add_edge(5, 6);
  EXPECT_EQ(complement(complement(g)), g);
}

TEST(GraphOps, EdgesAreCanonical) {
  Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_EQ(Edge(2, 5), e);
}

TEST(Multigraph, Multiplicities) {
  Multigraph m(3);
  m.add_edge(0, 1, 2);
  m.add_edge(1, 2);
  EXPECT_EQ(m.multiplicity(1, 0), 2);
  EXPECT_EQ(m.degree(1), 3);
  EXPECT_EQ(m.edge_count(), 3u);
  EXPECT_EQ(m.edges().size(), 3u);
}

TEST(PairList, OrderingAndValidation) {
  std::vector<int> deg{3, 1, 2, 2};
  auto m = PairList::ordered_by({{0, 1}, {2, 3}}, deg);
  EXPECT_EQ(m.pairs()[0], (std::pair<int, int>{1, 0}));
  EXPECT_NO_THROW(m.validate(4));
  PairList bad({{0, 1}, {1, 2}});
  EXPECT_THROW(bad.validate(4), Error);
  auto partner = m.partner_map(4);
  EXPECT_EQ(partner[0], 1);
  EXPECT_EQ(partner[3], 2);
}

TEST(Decomposition, ColoringBuilderGroupsClasses) {
  auto d = make_coloring(3, {{Edge(0, 1), 0}, {Edge(1, 2), 1}, {Edge(0, 2), 2}});
  ASSERT_EQ(d.parts.size(), 3u);
  EXPECT_EQ(d.parts[1].front(), (VertexSequence{1, 2}));
  EXPECT_EQ(parse_kind("forests"), DecompositionKind::LinearForestSet);
  EXPECT_THROW(parse_kind("blob"), Error);
}
