#include "pyrolace/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "pyrolace/errors.hpp"

namespace pyrolace {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t SplitMix64::below(std::size_t bound) {
  if (bound == 0) throw PreconditionError("below() needs a positive bound");
  return static_cast<std::size_t>(next() % bound);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_graph(SplitMix64& rng, std::size_t order, double p) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = u + 1; v < order; ++v)
      if (rng.unit() < p) edges.emplace_back(u, v);
  return Graph(order, edges);
}

Hypergraph random_hypergraph(SplitMix64& rng, std::size_t order, std::size_t edge_count,
                             std::size_t max_size) {
  if (order == 0) throw PreconditionError("random hypergraph needs at least one vertex");
  if (max_size == 0) throw PreconditionError("random hypergraph needs max_size >= 1");
  std::vector<VertexSet> edges;
  std::vector<std::size_t> slots(order);
  for (std::size_t j = 0; j < edge_count; ++j) {
    const std::size_t size = 1 + rng.below(std::min(order, max_size));
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    VertexSet e;
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(slots[i], slots[i + rng.below(order - i)]);
      e.set(slots[i]);
    }
    edges.push_back(e);
  }
  return Hypergraph(order, std::move(edges));
}

Graph graph_from_code(std::size_t order, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = u + 1; v < order; ++v, ++bit)
      if (bit < 64 && (code >> bit) & 1U) edges.emplace_back(u, v);
  return Graph(order, edges);
}

}  // namespace pyrolace
