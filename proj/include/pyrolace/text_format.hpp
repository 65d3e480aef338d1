#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pyrolace/graph.hpp"
#include "pyrolace/hypergraph.hpp"
#include "pyrolace/labeling.hpp"

namespace pyrolace {

struct LabeledGraph {
  Graph graph;
  VertexLabeling labels;
  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

struct LabeledHypergraph {
  Hypergraph hypergraph;
  VertexLabeling labels;
  friend bool operator==(const LabeledHypergraph&, const LabeledHypergraph&) = default;
};

// Graph text:
//   graph <n>
//   v <label>          optional, fixes a label's index
//   e <label> <label>
// Labels register in order of first appearance; vertices never named get
// v<i+1>. Blank lines and lines starting with '#' are ignored; anything else
// is a ParseError.
LabeledGraph parse_graph(std::string_view text);
std::string serialize_graph(const LabeledGraph& g);

// Hypergraph text:
//   hypergraph <n>
//   v <label>
//   h <label> [<label> ...]
// Hyperedges may only name declared labels. A file with no v lines declares
// v1..vn implicitly.
LabeledHypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const LabeledHypergraph& h);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

LabeledGraph with_default_labels(const Graph& g);
LabeledHypergraph with_default_labels(const Hypergraph& h);

}  // namespace pyrolace
