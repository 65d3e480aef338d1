#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pyrolace/errors.hpp"
#include "pyrolace/graph.hpp"
#include "pyrolace/harness.hpp"
#include "pyrolace/hypergraph.hpp"
#include "pyrolace/random.hpp"

using namespace pyrolace;

namespace {

oracle::Adj adj_of(const Graph& g) {
  oracle::Edges edges(g.edges().begin(), g.edges().end());
  return oracle::adjacency(g.order(), edges);
}

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s{1, 70, 127};
  EXPECT_EQ(s.count(), 3u);
  EXPECT_EQ(s.first(), 1u);
  EXPECT_EQ(s.to_vector(), (std::vector<std::size_t>{1, 70, 127}));
  EXPECT_TRUE(s.is_subset_of(VertexSet::range(128)));
  EXPECT_FALSE(s.is_subset_of(VertexSet::range(127)));
  EXPECT_EQ(VertexSet::range(64).count(), 64u);
  EXPECT_EQ(VertexSet{}.first(), VertexSet::kCapacity);
  EXPECT_EQ((s - VertexSet{70}).count(), 2u);
}

TEST(Graph, NormalizesEdges) {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.adjacency(1), (std::vector<std::size_t>{0, 2}));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(2, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 2}}), IndexError);
  EXPECT_THROW(Graph(129), CapacityError);
  EXPECT_THROW(Graph(3).neighbors(3), IndexError);
}

TEST(ClosedBall, Examples) {
  const Graph g = fig3_graph().graph;
  for (std::size_t v = 0; v < g.order(); ++v) EXPECT_EQ(closed_ball(g, v, 0), VertexSet{v});
  EXPECT_EQ(closed_ball(g, 1, 1), (VertexSet{0, 1, 2, 3, 5}));
  EXPECT_EQ(closed_ball(path_graph(5), 2, 2), VertexSet::range(5));
  EXPECT_THROW(closed_ball(g, 8, 1), IndexError);
}

TEST(Distance, Examples) {
  const Graph g = fig3_graph().graph;
  EXPECT_EQ(distance(g, 4, 4), 0u);
  EXPECT_EQ(distance(g, 0, 7), 3u);
  EXPECT_EQ(distance(empty_graph(2), 0, 1), std::nullopt);
  EXPECT_THROW(distance(g, 0, 9), IndexError);
}

TEST(Distance, MatchesFloydOnRandomGraphs) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 1 + rng.below(12), 0.3);
    const auto ref = oracle::floyd(adj_of(g));
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v) {
        const Distance d = distance(g, u, v);
        if (ref[u][v] >= oracle::kInf) EXPECT_FALSE(d.has_value());
        else EXPECT_EQ(d, static_cast<std::size_t>(ref[u][v]));
      }
  }
}

TEST(Distance, IsAMetricOnComponents) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 1 + rng.below(12), 0.35);
    const auto d = distance_matrix(g);
    const std::size_t n = g.order();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        EXPECT_EQ(d[u][v], d[v][u]);
        EXPECT_EQ(d[u][v] == 0u, u == v);
        for (std::size_t w = 0; w < n; ++w)
          if (d[u][v] && d[v][w]) {
            ASSERT_TRUE(d[u][w].has_value());
            EXPECT_LE(*d[u][w], *d[u][v] + *d[v][w]);
          }
      }
  }
}

TEST(ClosedBall, MonotoneAndRecursive) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 1 + rng.below(12), 0.25);
    for (std::size_t v = 0; v < g.order(); ++v)
      for (std::size_t r = 1; r < 5; ++r) {
        const VertexSet prev = closed_ball(g, v, r - 1);
        const VertexSet ball = closed_ball(g, v, r);
        EXPECT_TRUE(prev.is_subset_of(ball));
        EXPECT_EQ(ball, prev | g.neighborhood(prev));
      }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(cycle_graph(5)), std::vector<VertexSet>{VertexSet::range(5)});
  const auto singles = connected_components(empty_graph(3));
  ASSERT_EQ(singles.size(), 3u);
  EXPECT_EQ(singles[2], VertexSet{2});

  const auto parts = connected_components(incidence_graph(fig5_hypergraph().hypergraph).graph);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].count(), 4u);
  EXPECT_EQ(parts[1].count(), 5u);
}

TEST(Components, PartitionProperty) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, rng.below(14), 0.15);
    VertexSet seen;
    std::size_t last_min = 0;
    bool first = true;
    for (const VertexSet& c : connected_components(g)) {
      EXPECT_FALSE(c.intersects(seen));
      seen |= c;
      if (!first) EXPECT_GT(c.first(), last_min);
      last_min = c.first();
      first = false;
      // maximal: no edge leaves the part
      EXPECT_TRUE(g.neighborhood(c).is_subset_of(c));
    }
    EXPECT_EQ(seen, g.vertices());
  }
}

TEST(DegreeSequence, Examples) {
  EXPECT_EQ(degree_sequence(fig7_G().graph), (std::vector<std::size_t>{5, 2, 2, 2, 2, 1}));
  EXPECT_EQ(degree_sequence(fig7_H().graph), (std::vector<std::size_t>{3, 3, 3, 3, 1, 1}));
  EXPECT_EQ(degree_sequence(complete_graph(3)), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(are_isomorphic_bruteforce(fig7_G().graph, fig7_H().graph));
  EXPECT_TRUE(are_isomorphic_bruteforce(fig3_graph().graph, fig3_graph().graph));
  const Graph relabeled(3, {{0, 2}, {2, 1}});
  EXPECT_TRUE(are_isomorphic_bruteforce(path_graph(3), relabeled));
  EXPECT_FALSE(are_isomorphic_bruteforce(path_graph(3), complete_graph(3)));
  EXPECT_THROW(are_isomorphic_bruteforce(path_graph(3), path_graph(4)), PreconditionError);
  EXPECT_THROW(are_isomorphic_bruteforce(path_graph(11), path_graph(11)), PreconditionError);
}

TEST(Isomorphism, ReflexiveAndSymmetric) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    const Graph g = random_graph(rng, n, 0.5);
    const Graph h = random_graph(rng, n, 0.5);
    EXPECT_TRUE(are_isomorphic_bruteforce(g, g));
    EXPECT_EQ(are_isomorphic_bruteforce(g, h), are_isomorphic_bruteforce(h, g));
  }
}

TEST(Isomorphism, DetectsPermutedCopies) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    const Graph g = random_graph(rng, n, 0.5);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> mapped;
    for (auto [u, v] : g.edges()) mapped.emplace_back(perm[u], perm[v]);
    EXPECT_TRUE(are_isomorphic_bruteforce(g, Graph(n, mapped)));
  }
}

TEST(AdjacencyMatrix, SymmetricZeroDiagonal) {
  const Graph g = fig3_graph().graph;
  const IntMatrix a = adjacency_matrix(g);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_EQ(a(i, i), 0);
    for (std::size_t j = 0; j < g.order(); ++j) {
      EXPECT_EQ(a(i, j), a(j, i));
      EXPECT_EQ(a(i, j) == 1, g.has_edge(i, j) && i != j);
    }
  }
}

TEST(Labeling, Bijective) {
  VertexLabeling l = VertexLabeling::numbered("v", 3);
  EXPECT_EQ(l.index_of("v2"), 1u);
  EXPECT_EQ(l.label(2), "v3");
  EXPECT_EQ(l.add("h1"), 3u);
  EXPECT_THROW(l.add("v1"), PreconditionError);
  EXPECT_THROW(l.add("a b"), PreconditionError);
  EXPECT_THROW(l.label(9), IndexError);
  EXPECT_FALSE(l.find("x").has_value());
}
