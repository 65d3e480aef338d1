#pragma once

#include <cstddef>
#include <vector>

#include "pyrolace/graph.hpp"
#include "pyrolace/labeling.hpp"
#include "pyrolace/vertex_set.hpp"

namespace pyrolace {

/// Vertices 0..order-1 plus an ordered list of non-empty hyperedges.
/// Duplicate hyperedges are kept; a hyperedge's identity is its position.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t order, std::vector<VertexSet> hyperedges = {});
  Hypergraph(std::size_t order, const std::vector<std::vector<std::size_t>>& hyperedges);

  std::size_t order() const { return order_; }
  std::size_t edge_count() const { return hyperedges_.size(); }
  const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }
  const VertexSet& hyperedge(std::size_t j) const;
  VertexSet vertices() const { return VertexSet::range(order_); }

  /// Indices of hyperedges containing v.
  const std::vector<std::size_t>& incident(std::size_t v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.order_ == b.order_ && a.hyperedges_ == b.hyperedges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<VertexSet> hyperedges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Which hyperedges may propagate burning.
///
/// vacuous: h burns v once h minus {v} is fully burned, so a singleton {v}
///          ignites v on the first propagation step.
/// strict:  only hyperedges with at least two vertices propagate.
enum class SingletonMode { vacuous, strict };

const char* to_string(SingletonMode mode);

struct Firing {
  std::size_t vertex;
  std::size_t hyperedge;
};

/// Every unburned v with an eligible hyperedge h such that h minus {v} is a
/// subset of `burned`, paired with the lowest such h. Sorted by vertex.
std::vector<Firing> firings(const Hypergraph& h, const VertexSet& burned, SingletonMode mode);

/// Vertex set of firings(h, burned, mode).
VertexSet fire_step(const Hypergraph& h, const VertexSet& burned, SingletonMode mode);

/// Bipartite vertex/hyperedge incidence graph. Vertex-side nodes are
/// 0..split-1, hyperedge j is node split + j.
struct IncidenceGraph {
  Graph graph;
  std::size_t split = 0;
  VertexLabeling labeling;

  std::size_t hyperedge_node(std::size_t j) const { return split + j; }
  VertexSet hyperedge_side() const { return VertexSet::range(graph.order()) - VertexSet::range(split); }
};

/// Labels vertex nodes v1..vn and hyperedge nodes h1..hm.
IncidenceGraph incidence_graph(const Hypergraph& h);
/// Uses the given vertex labels and h1..hm for hyperedges.
IncidenceGraph incidence_graph(const Hypergraph& h, const VertexLabeling& vertex_labels);

/// Inverse of incidence_graph: hyperedge j = neighbors of node split + j.
Hypergraph hypergraph_from_incidence(const Graph& g, std::size_t split);

struct HypergraphComponent {
  VertexSet vertices;
  std::vector<std::size_t> hyperedges;
};

/// Components ordered by smallest vertex. Isolated vertices form their own
/// component with no hyperedges.
std::vector<HypergraphComponent> hypergraph_components(const Hypergraph& h);

/// Number of components containing a hyperedge of size >= 2.
std::size_t count_nonsingleton_components(const Hypergraph& h);

/// The component as a standalone hypergraph, vertices renumbered in
/// ascending order.
Hypergraph component_subhypergraph(const Hypergraph& h, const HypergraphComponent& component);

/// Hypergraph whose hyperedges are the edges of g.
Hypergraph as_hypergraph(const Graph& g);

/// Disjoint union of single-hyperedge components with the given vertex counts.
Hypergraph disjoint_single_edges(const std::vector<std::size_t>& sizes);

}  // namespace pyrolace
