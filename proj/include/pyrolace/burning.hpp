#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pyrolace/graph.hpp"
#include "pyrolace/hypergraph.hpp"
#include "pyrolace/vertex_set.hpp"

namespace pyrolace {

/// Sources in the order they are chosen, one per round.
using BurningSequence = std::vector<std::size_t>;

struct BurnRound {
  /// Absent when the sequence is exhausted or nothing was left unburned.
  std::optional<std::size_t> source;
  /// Vertices burned by propagation this round (excluding the source).
  VertexSet spread;
};

struct BurnTrace {
  std::vector<BurnRound> rounds;
  VertexSet final_burned;
  /// First round at whose end every vertex is burned.
  std::optional<std::size_t> completed_in;

  /// Burned set at the end of round t (t = 0 is the empty start).
  VertexSet burned_after(std::size_t t) const;
};

/// Round t: the t-th source is placed first, then every unburned vertex with
/// a neighbor burned at the end of round t-1 burns. Rounds continue past the
/// end of the sequence until propagation stops changing anything.
///
/// Throws IndexError for an invalid index and PreconditionError when a source
/// is already burned while unburned vertices remain.
BurnTrace simulate_graph_burning(const Graph& g, std::span<const std::size_t> seq);

/// Distance/coverage characterization: d(v_i, v_j) >= |i - j| for all pairs
/// and the union of N_{k-l}[v_l] is V(G).
bool is_burning_sequence(const Graph& g, std::span<const std::size_t> seq);

/// Simulation-side predicate: every entry is placed as an unburned source and
/// all of V(G) is burned by the end of round |seq|.
bool sequence_burns_graph(const Graph& g, std::span<const std::size_t> seq);

struct BurningResult {
  std::size_t rounds = 0;
  BurningSequence witness;
};

/// Exact b(G) by iterative deepening over the sequence length. Sources are
/// tried in ascending index, so the witness is the lexicographically least
/// optimal sequence. Throws PreconditionError on the empty graph.
BurningResult burning_number(const Graph& g);

struct RedundantLastSource {
  bool found = false;
  std::optional<BurningSequence> witness;
};

/// Whether some optimal sequence (v_1..v_k) already burns V(G) without v_k,
/// i.e. the union of N_{k-j}[v_j] for j < k is V(G). Witness is the
/// lexicographically least such sequence.
RedundantLastSource has_optimal_sequence_with_redundant_last_source(const Graph& g);

/// seq is an optimal burning sequence of g and its last source is redundant.
bool is_optimal_with_redundant_last_source(const Graph& g, std::span<const std::size_t> seq);

/// Round-based hypergraph burning; same round structure as the graph case.
BurnTrace simulate_hypergraph_burning(const Hypergraph& h, std::span<const std::size_t> seq,
                                      SingletonMode mode = SingletonMode::strict);

/// Exact b(H): fewest rounds, choosing one unburned source per round, until
/// every vertex is burned. Throws PreconditionError on the empty hypergraph.
BurningResult hypergraph_burning_number(const Hypergraph& h,
                                        SingletonMode mode = SingletonMode::strict);

}  // namespace pyrolace
