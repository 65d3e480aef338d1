#pragma once

#include <cstddef>
#include <vector>

#include "pyrolace/hypergraph.hpp"
#include "pyrolace/vertex_set.hpp"

namespace pyrolace {

struct LazyRound {
  VertexSet burned;
  /// One entry per newly burned vertex, ascending, with the lowest-index
  /// hyperedge that fired it.
  std::vector<Firing> firings;
};

struct LazyBurnResult {
  VertexSet initial;
  std::vector<LazyRound> rounds;
  VertexSet closure;
};

/// Burns `initial` up front, then in each round burns every vertex that is
/// the only unburned member of an eligible hyperedge, until a fixpoint.
LazyBurnResult lazy_propagate(const Hypergraph& h, const VertexSet& initial,
                              SingletonMode mode = SingletonMode::vacuous);

/// Same closure computed one vertex at a time from a worklist.
VertexSet lazy_closure_async(const Hypergraph& h, const VertexSet& initial,
                             SingletonMode mode = SingletonMode::vacuous);

bool is_lazy_burning_set(const Hypergraph& h, const VertexSet& set,
                         SingletonMode mode = SingletonMode::vacuous);

/// Vertices that no propagation can ever reach: those in no eligible
/// hyperedge. Every lazy burning set contains them.
VertexSet forced_lazy_vertices(const Hypergraph& h, SingletonMode mode = SingletonMode::vacuous);

struct LazyBurningNumber {
  std::size_t size = 0;
  VertexSet witness;
};

/// Exact b_L(H). Candidate sets are enumerated by increasing size and, within
/// a size, in lexicographic order of their sorted members, so the witness is
/// the lexicographically least minimum lazy burning set.
LazyBurningNumber lazy_burning_number(const Hypergraph& h,
                                      SingletonMode mode = SingletonMode::vacuous);

/// b_L(H) equals the sum of b_L over the components of H.
bool component_additivity_check(const Hypergraph& h, SingletonMode mode = SingletonMode::vacuous);

}  // namespace pyrolace
