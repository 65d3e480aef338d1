#pragma once

#include <cstddef>
#include <cstdint>

#include "pyrolace/graph.hpp"
#include "pyrolace/hypergraph.hpp"

namespace pyrolace {

// SplitMix64. State advances by 0x9E3779B97F4A7C15 per draw; output is
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31);
// Any implementation of those three lines reproduces every sweep.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next();
  /// next() % bound; bound must be positive. Modulo bias is accepted.
  std::size_t below(std::size_t bound);
  /// Top 53 bits as a double in [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

/// Each pair (u, v), u < v in lexicographic order, becomes an edge when
/// unit() < p. One draw per pair.
Graph random_graph(SplitMix64& rng, std::size_t order, double p);

/// edge_count hyperedges. Each draws its size as 1 + below(min(order,
/// max_size)), then its members by a partial Fisher-Yates shuffle of 0..order-1
/// (swap slot i with i + below(order - i)). Requires order >= 1.
Hypergraph random_hypergraph(SplitMix64& rng, std::size_t order, std::size_t edge_count,
                             std::size_t max_size);

/// Graph from the bits of `code`, one bit per pair in lexicographic order.
Graph graph_from_code(std::size_t order, std::uint64_t code);

}  // namespace pyrolace
