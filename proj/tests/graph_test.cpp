#include "bicirc/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "support/builders.hpp"

using bicirc::Graph;
using bicirc::VertexPartition;
using testsup::complete_graph;
using testsup::cycle_graph;
using testsup::path_graph;
using testsup::petersen;
using testsup::random_graph;

TEST(Graph, ConstructionBasics) {
  Graph g(4, {{0, 1}, {1, 2}, {1, 2}});  // duplicate collapses
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 2}));
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));

  EXPECT_THROW(Graph(0), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, HandshakeOnRandomGraphs) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(1 + trial, 0.4, rng);
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(Graph, InducedSubgraphRelabelsAscending) {
  Graph c5 = cycle_graph(5);
  Graph sub = induced_subgraph(c5, {1, 2, 4});
  EXPECT_EQ(sub.vertex_count(), 3);
  // 1-2 is the only edge among {1,2,4}; relabeled to 0-1.
  EXPECT_EQ(sub.edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_THROW(induced_subgraph(c5, {}), std::invalid_argument);
  EXPECT_THROW(induced_subgraph(c5, {0, 0}), std::invalid_argument);
}

TEST(Graph, ConnectivityAndCycles) {
  EXPECT_TRUE(is_connected(cycle_graph(6)));
  EXPECT_FALSE(is_connected(disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_TRUE(is_connected(Graph(1)));

  EXPECT_TRUE(is_cycle(cycle_graph(3)));
  EXPECT_TRUE(is_cycle(cycle_graph(17)));
  EXPECT_FALSE(is_cycle(path_graph(4)));
  EXPECT_FALSE(is_cycle(disjoint_union(cycle_graph(3), cycle_graph(4))));
  EXPECT_FALSE(is_cycle(complete_graph(4)));
}

TEST(Graph, ComplementAndDegreeSequence) {
  Graph c5 = cycle_graph(5);
  // Complementing is an involution; C5's complement is the pentagram, a
  // relabelled C5, so edge counts agree but edge sets do not.
  EXPECT_EQ(complement(complement(c5)), c5);
  EXPECT_EQ(complement(c5).edge_count(), c5.edge_count());
  EXPECT_NE(complement(c5).edges(), c5.edges());
  Graph k4 = complete_graph(4);
  EXPECT_EQ(complement(k4).edge_count(), 0);
  EXPECT_EQ(degree_sequence(testsup::star_graph(3)), (std::vector<int>{1, 1, 1, 3}));
}

TEST(Graph, CommonNeighbors) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(common_neighbors(k4, 0, 1), 2);
  Graph p = petersen();
  // Petersen: adjacent vertices share 0 neighbours, non-adjacent share 1.
  EXPECT_EQ(common_neighbors(p, 0, 1), 0);
  EXPECT_EQ(common_neighbors(p, 0, 2), 1);
}

TEST(Graph, PartitionValidation) {
  VertexPartition ok{{{0, 1}, {2, 3}}};
  auto cls = validate_partition(ok, 4);
  EXPECT_EQ(cls, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(validate_partition(VertexPartition{{{0, 1}}}, 4), std::invalid_argument);
  EXPECT_THROW(validate_partition(VertexPartition{{{0, 1}, {1, 2, 3}}}, 4),
               std::invalid_argument);
  EXPECT_THROW(validate_partition(VertexPartition{{{0, 1}, {}, {2, 3}}}, 4),
               std::invalid_argument);
}

TEST(Graph, QuotientDropsLoops) {
  // C6 over antipodal pairs is C3.
  Graph c6 = cycle_graph(6);
  VertexPartition pairs{{{0, 3}, {1, 4}, {2, 5}}};
  EXPECT_EQ(quotient(c6, pairs), cycle_graph(3));

  // Petersen over spoke pairs {i, i+5}: outer and inner edges project onto
  // all five chords, spokes become loops and vanish.
  Graph p = petersen();
  VertexPartition spokes{{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}};
  EXPECT_EQ(quotient(p, spokes), complete_graph(5));
}

TEST(Graph, CoverCheck) {
  Graph c6 = cycle_graph(6);
  VertexPartition pairs{{{0, 3}, {1, 4}, {2, 5}}};
  auto r = r_cover_check(c6, pairs);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, 1);

  // C4 over its diagonals doubles every quotient edge.
  Graph c4 = cycle_graph(4);
  VertexPartition diag{{{0, 2}, {1, 3}}};
  auto r2 = r_cover_check(c4, diag);
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(*r2, 2);

  // Internal edge: not a cover at all.
  VertexPartition halves{{{0, 1, 2}, {3, 4, 5}}};
  EXPECT_FALSE(r_cover_check(c6, halves).has_value());

  // Non-uniform neighbour counts: the star's center sees 3, each leaf sees 1.
  EXPECT_FALSE(
      r_cover_check(testsup::star_graph(3), VertexPartition{{{0}, {1, 2, 3}}})
          .has_value());
}

TEST(Graph, OneCoverPreservesValence) {
  Graph c6 = cycle_graph(6);
  VertexPartition pairs{{{0, 3}, {1, 4}, {2, 5}}};
  ASSERT_EQ(r_cover_check(c6, pairs), std::optional<int>(1));
  Graph q = quotient(c6, pairs);
  auto cls = validate_partition(pairs, 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(q.degree(cls[v]), c6.degree(v));
}

TEST(Graph, DisjointUnion) {
  Graph u = disjoint_union(cycle_graph(3), path_graph(2));
  EXPECT_EQ(u.vertex_count(), 5);
  EXPECT_EQ(u.edge_count(), 4);
  EXPECT_TRUE(u.adjacent(3, 4));
  EXPECT_FALSE(u.adjacent(2, 3));
}
