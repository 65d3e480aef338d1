#include <gtest/gtest.h>

#include "pyrolace/errors.hpp"
#include "pyrolace/harness.hpp"
#include "pyrolace/random.hpp"
#include "pyrolace/text_format.hpp"

using namespace pyrolace;

namespace {

std::size_t parse_error_line(const std::string& text, bool hyper) {
  try {
    if (hyper) parse_hypergraph(text);
    else parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(GraphText, ParsesLabelsInFirstAppearanceOrder) {
  const LabeledGraph g = parse_graph("# comment\n\ngraph 4\ne b a\ne a c\n");
  EXPECT_EQ(g.graph.order(), 4u);
  EXPECT_EQ(g.labels.labels(), (std::vector<std::string>{"b", "a", "c", "v4"}));
  EXPECT_TRUE(g.graph.has_edge(0, 1));
  EXPECT_TRUE(g.graph.has_edge(1, 2));
}

TEST(GraphText, Errors) {
  EXPECT_EQ(parse_error_line("", false), 1u);
  EXPECT_EQ(parse_error_line("graph x\n", false), 1u);
  EXPECT_EQ(parse_error_line("graph 2\nq a b\n", false), 2u);
  EXPECT_EQ(parse_error_line("graph 2\ne a\n", false), 2u);
  EXPECT_EQ(parse_error_line("graph 2\ne a a\n", false), 2u);
  EXPECT_EQ(parse_error_line("graph 2\ne a b\ne b a\n", false), 3u);
  EXPECT_EQ(parse_error_line("graph 2\ne a b\n\ne a c\n", false), 4u);
  EXPECT_EQ(parse_error_line("graph 2\nv a\nv a\n", false), 3u);
  EXPECT_EQ(parse_error_line("hypergraph 2\n", false), 1u);
  EXPECT_THROW(parse_graph("graph 500\n"), CapacityError);
}

TEST(HypergraphText, ImplicitAndExplicitLabels) {
  const LabeledHypergraph implicit = parse_hypergraph("hypergraph 3\nh v1 v3\nh v2\n");
  EXPECT_EQ(implicit.labels.labels(), (std::vector<std::string>{"v1", "v2", "v3"}));
  EXPECT_EQ(implicit.hypergraph.hyperedge(0), (VertexSet{0, 2}));
  EXPECT_EQ(implicit.hypergraph.hyperedge(1), VertexSet{1});

  const LabeledHypergraph named = parse_hypergraph("hypergraph 2\nv x\nv y\nh y x\nh y x\n");
  EXPECT_EQ(named.hypergraph.edge_count(), 2u);
  EXPECT_EQ(named.labels.index_of("y"), 1u);
}

TEST(HypergraphText, Errors) {
  EXPECT_EQ(parse_error_line("hypergraph 2\nh\n", true), 2u);
  EXPECT_EQ(parse_error_line("hypergraph 2\nh v1 v9\n", true), 2u);
  EXPECT_EQ(parse_error_line("hypergraph 2\nh v1 v1\n", true), 2u);
  EXPECT_EQ(parse_error_line("hypergraph 2\nv a\nh a b\nv b\n", true), 3u);
  EXPECT_EQ(parse_error_line("hypergraph 1\nv a\nv b\n", true), 3u);
  EXPECT_EQ(parse_error_line("hypergraph 2\ne v1 v2\n", true), 2u);
}

TEST(Text, FixturesRoundTrip) {
  for (const Fixture& f : fixtures()) {
    if (f.is_graph()) EXPECT_EQ(parse_graph(serialize_graph(f.graph())), f.graph()) << f.name;
    else EXPECT_EQ(parse_hypergraph(serialize_hypergraph(f.hypergraph())), f.hypergraph()) << f.name;
  }
}

TEST(Text, RandomRoundTrip) {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledGraph g = with_default_labels(random_graph(rng, rng.below(15), 0.3));
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    const std::size_t n = 1 + rng.below(10);
    const LabeledHypergraph h = with_default_labels(random_hypergraph(rng, n, rng.below(7), n));
    EXPECT_EQ(parse_hypergraph(serialize_hypergraph(h)), h);
  }
}

TEST(Text, FixtureFilesMatchBuiltIns) {
  const std::filesystem::path dir = PYROLACE_TEST_FIXTURE_DIR;
  EXPECT_EQ(parse_hypergraph(read_text_file(dir / "fig1.h")), fig1_hypergraph());
  EXPECT_EQ(parse_graph(read_text_file(dir / "fig3.g")), fig3_graph());
  EXPECT_EQ(parse_hypergraph(read_text_file(dir / "fig5.h")), fig5_hypergraph());
  EXPECT_EQ(parse_hypergraph(read_text_file(dir / "fig6.h")), fig6_hypergraph());
  EXPECT_EQ(parse_graph(read_text_file(dir / "fig7_G.g")), fig7_G());
  EXPECT_EQ(parse_graph(read_text_file(dir / "fig7_H.g")), fig7_H());
  EXPECT_THROW(read_text_file(dir / "nope.g"), Error);
}
