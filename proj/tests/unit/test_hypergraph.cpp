#include <gtest/gtest.h>

#include <numeric>

#include "pyrolace/errors.hpp"
#include "pyrolace/harness.hpp"
#include "pyrolace/hypergraph.hpp"
#include "pyrolace/random.hpp"

using namespace pyrolace;

TEST(Hypergraph, Construction) {
  const Hypergraph h(3, std::vector<std::vector<std::size_t>>{{0, 1}, {0, 1}, {2}});
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.incident(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(Hypergraph(3, std::vector<std::vector<std::size_t>>{{}}), PreconditionError);
  EXPECT_THROW(Hypergraph(3, std::vector<std::vector<std::size_t>>{{0, 3}}), IndexError);
  EXPECT_THROW(Hypergraph(200), CapacityError);
}

TEST(IncidenceGraph, Fig1) {
  const IncidenceGraph ig = incidence_graph(fig1_hypergraph().hypergraph);
  EXPECT_EQ(ig.split, 4u);
  EXPECT_EQ(ig.graph.order(), 7u);
  auto idx = [&](const char* s) { return ig.labeling.index_of(s); };
  const std::vector<std::pair<const char*, const char*>> expected{
      {"v1", "h1"}, {"v2", "h1"}, {"v3", "h1"}, {"v2", "h2"}, {"v4", "h2"}, {"v3", "h3"}, {"v4", "h3"}};
  EXPECT_EQ(ig.graph.size(), expected.size());
  for (auto [a, b] : expected) EXPECT_TRUE(ig.graph.has_edge(idx(a), idx(b))) << a << b;
}

TEST(IncidenceGraph, EdgelessAndStar) {
  const IncidenceGraph none = incidence_graph(Hypergraph(5));
  EXPECT_EQ(none.graph.order(), 5u);
  EXPECT_EQ(none.graph.size(), 0u);

  const IncidenceGraph star = incidence_graph(single_edge_hypergraph(4));
  EXPECT_EQ(star.graph.order(), 6u);
  EXPECT_EQ(star.graph.degree(star.hyperedge_node(0)), 5u);
  EXPECT_EQ(degree_sequence(star.graph), degree_sequence(star_graph(5)));
}

TEST(IncidenceGraph, DuplicateEdgesGetDistinctNodes) {
  const Hypergraph h(2, std::vector<std::vector<std::size_t>>{{0, 1}, {0, 1}});
  const IncidenceGraph ig = incidence_graph(h);
  EXPECT_EQ(ig.graph.order(), 4u);
  EXPECT_EQ(ig.graph.size(), 4u);
}

TEST(IncidenceGraph, RoundTripAndBipartite) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const Hypergraph h = random_hypergraph(rng, n, rng.below(7), n);
    const IncidenceGraph ig = incidence_graph(h);
    for (auto [u, v] : ig.graph.edges()) EXPECT_TRUE(u < ig.split && v >= ig.split);
    for (std::size_t j = 0; j < h.edge_count(); ++j)
      EXPECT_EQ(ig.graph.degree(ig.hyperedge_node(j)), h.hyperedge(j).count());
    EXPECT_EQ(hypergraph_from_incidence(ig.graph, ig.split), h);
  }
}

TEST(HypergraphComponents, Examples) {
  const auto five = hypergraph_components(fig5_hypergraph().hypergraph);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five[0].vertices, (VertexSet{0, 1, 2}));
  EXPECT_EQ(five[0].hyperedges, std::vector<std::size_t>{0});
  EXPECT_EQ(five[1].vertices, (VertexSet{3, 4, 5, 6}));
  EXPECT_EQ(five[1].hyperedges, std::vector<std::size_t>{1});

  EXPECT_EQ(hypergraph_components(fig6_hypergraph().hypergraph).size(), 1u);
  const auto isolated = hypergraph_components(Hypergraph(3));
  ASSERT_EQ(isolated.size(), 3u);
  for (const auto& c : isolated) EXPECT_TRUE(c.hyperedges.empty());
}

TEST(HypergraphComponents, NonsingletonCount) {
  EXPECT_EQ(count_nonsingleton_components(fig5_hypergraph().hypergraph), 2u);
  EXPECT_EQ(count_nonsingleton_components(fig1_hypergraph().hypergraph), 1u);
  EXPECT_EQ(count_nonsingleton_components(fig6_hypergraph().hypergraph), 1u);
  EXPECT_EQ(count_nonsingleton_components(Hypergraph(2, std::vector<std::vector<std::size_t>>{{0}})),
            0u);
}

TEST(HypergraphComponents, PartitionAndAgreeWithIncidenceGraph) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const Hypergraph h = random_hypergraph(rng, n, rng.below(7), 4);
    const auto comps = hypergraph_components(h);
    std::size_t vertex_total = 0;
    std::vector<std::size_t> edges;
    for (const auto& c : comps) {
      vertex_total += c.vertices.count();
      edges.insert(edges.end(), c.hyperedges.begin(), c.hyperedges.end());
    }
    EXPECT_EQ(vertex_total, n);
    std::sort(edges.begin(), edges.end());
    std::vector<std::size_t> all(h.edge_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    EXPECT_EQ(edges, all);

    const IncidenceGraph ig = incidence_graph(h);
    std::vector<VertexSet> projected;
    for (const VertexSet& c : connected_components(ig.graph)) {
      const VertexSet side = c & VertexSet::range(ig.split);
      if (!side.empty()) projected.push_back(side);
    }
    ASSERT_EQ(projected.size(), comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) EXPECT_EQ(projected[i], comps[i].vertices);
  }
}

TEST(Firing, ModesDifferOnSingletons) {
  const Hypergraph h(2, std::vector<std::vector<std::size_t>>{{0}, {0, 1}});
  EXPECT_EQ(fire_step(h, {}, SingletonMode::vacuous), VertexSet{0});
  EXPECT_TRUE(fire_step(h, {}, SingletonMode::strict).empty());
  EXPECT_EQ(fire_step(h, {0}, SingletonMode::strict), VertexSet{1});
  const auto f = firings(h, {}, SingletonMode::vacuous);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].hyperedge, 0u);
}
