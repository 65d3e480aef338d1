#pragma once

#include <cstddef>
#include <vector>

#include "pyrolace/graph.hpp"
#include "pyrolace/vertex_set.hpp"

namespace pyrolace {

struct Force {
  std::size_t forcer;
  std::size_t forced;
  friend bool operator==(const Force&, const Force&) = default;
};

struct ForcingTrace {
  VertexSet initial;
  /// All forces, grouped by round, ascending forcer index within a round.
  std::vector<Force> forces;
  /// Blue set at the end of each round.
  std::vector<VertexSet> rounds;
  VertexSet final;
};

/// Applies the color change rule to a fixpoint. Each round collects every
/// force valid against the coloring at the start of the round and applies
/// them together; a vertex forced by several blue neighbors is credited to
/// the lowest-index forcer.
ForcingTrace force_closure(const Graph& g, const VertexSet& initial);

/// Same final set, one force at a time.
VertexSet force_closure_async(const Graph& g, const VertexSet& initial);

bool is_zero_forcing_set(const Graph& g, const VertexSet& set);

struct ZeroForcingNumber {
  std::size_t size = 0;
  VertexSet witness;
};

/// Exact Z(G), solved per connected component and summed. The witness is the
/// lexicographically least minimum zero forcing set.
ZeroForcingNumber zero_forcing_number(const Graph& g);

/// Exact Z(G) by enumerating subsets of the whole vertex set, without
/// component decomposition.
ZeroForcingNumber zero_forcing_number_undecomposed(const Graph& g);

struct NeighborLemmaAudit {
  VertexSet witness;
  /// Vertices all of whose neighbors lie in the witness.
  std::vector<std::size_t> violators;
  bool holds() const { return violators.empty(); }
};

/// Takes the minimum zero forcing set reported by zero_forcing_number and
/// checks that every vertex has a neighbor outside it. Throws
/// PreconditionError unless order >= 2 and minimum degree >= 1.
NeighborLemmaAudit neighbor_lemma_audit(const Graph& g);

bool min_zfs_neighbor_lemma_check(const Graph& g);

}  // namespace pyrolace
