#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pyrolace/int_matrix.hpp"
#include "pyrolace/vertex_set.hpp"

namespace pyrolace {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..order-1.
///
/// Edges are stored normalized (first < second), sorted and deduplicated.
/// Construction rejects self-loops, endpoints >= order and orders above
/// VertexSet::kCapacity.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexSet& neighbors(std::size_t v) const;
  /// Sorted neighbor list.
  const std::vector<std::size_t>& adjacency(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adjacency(v).size(); }
  bool has_edge(std::size_t u, std::size_t v) const;
  VertexSet vertices() const { return VertexSet::range(order_); }

  /// Union of the neighborhoods of every vertex in s (open neighborhood).
  VertexSet neighborhood(const VertexSet& s) const;

  /// Copy with one additional edge.
  Graph with_edge(std::size_t u, std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(std::size_t v) const;

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> neighbor_sets_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Shortest-path length; std::nullopt means unreachable.
using Distance = std::optional<std::size_t>;

/// N_r[v] = {u : d(u, v) <= r}.
VertexSet closed_ball(const Graph& g, std::size_t v, std::size_t radius);

Distance distance(const Graph& g, std::size_t u, std::size_t v);

/// All-pairs BFS distances.
std::vector<std::vector<Distance>> distance_matrix(const Graph& g);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Degrees sorted non-increasing.
std::vector<std::size_t> degree_sequence(const Graph& g);

inline constexpr std::size_t kDefaultIsomorphismLimit = 10;

/// Exhaustive isomorphism test by permutation search with adjacency-consistent
/// backtracking. Throws PreconditionError if the orders differ or exceed
/// max_order.
bool are_isomorphic_bruteforce(const Graph& g, const Graph& h,
                               std::size_t max_order = kDefaultIsomorphismLimit);

IntMatrix adjacency_matrix(const Graph& g);

// Named families.
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}, centre at index 0.
Graph star_graph(std::size_t leaves);

}  // namespace pyrolace
