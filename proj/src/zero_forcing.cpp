#include "pyrolace/zero_forcing.hpp"

#include "combinations.hpp"
#include "pyrolace/errors.hpp"

namespace pyrolace {

ForcingTrace force_closure(const Graph& g, const VertexSet& initial) {
  ForcingTrace trace;
  trace.initial = initial & g.vertices();
  VertexSet blue = trace.initial;
  for (;;) {
    VertexSet newly;
    std::vector<Force> round;
    blue.for_each([&](std::size_t u) {
      const VertexSet white = g.neighbors(u) - blue;
      if (white.count() != 1) return;
      const std::size_t w = white.first();
      if (newly.test(w)) return;
      newly.set(w);
      round.push_back({u, w});
    });
    if (round.empty()) break;
    blue |= newly;
    trace.forces.insert(trace.forces.end(), round.begin(), round.end());
    trace.rounds.push_back(blue);
  }
  trace.final = blue;
  return trace;
}

VertexSet force_closure_async(const Graph& g, const VertexSet& initial) {
  VertexSet blue = initial & g.vertices();
  std::vector<std::size_t> queue = blue.to_vector();
  // A vertex can only gain forcing ability when it or a neighbor turns blue.
  while (!queue.empty()) {
    const std::size_t u = queue.back();
    queue.pop_back();
    if (!blue.test(u)) continue;
    const VertexSet white = g.neighbors(u) - blue;
    if (white.count() != 1) continue;
    const std::size_t w = white.first();
    blue.set(w);
    queue.push_back(w);
    for (std::size_t x : g.adjacency(w)) queue.push_back(x);
  }
  return blue;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& set) {
  return force_closure_async(g, set) == g.vertices();
}

namespace {

/// Smallest lexicographically-least subset of `part` whose closure covers
/// `part`. Vertices of `part` with no neighbor are always included.
VertexSet minimum_forcing_subset(const Graph& g, const VertexSet& part) {
  VertexSet isolated;
  part.for_each([&](std::size_t v) {
    if (g.degree(v) == 0) isolated.set(v);
  });
  const std::vector<std::size_t> pool = (part - isolated).to_vector();
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    VertexSet found;
    if (detail::for_each_combination(pool, k, isolated, [&](const VertexSet& s) {
          if (!part.is_subset_of(force_closure_async(g, s))) return false;
          found = s;
          return true;
        }))
      return found;
  }
  return part;
}

}  // namespace

ZeroForcingNumber zero_forcing_number(const Graph& g) {
  VertexSet witness;
  for (const VertexSet& component : connected_components(g))
    witness |= minimum_forcing_subset(g, component);
  return {witness.count(), witness};
}

ZeroForcingNumber zero_forcing_number_undecomposed(const Graph& g) {
  const VertexSet witness = minimum_forcing_subset(g, g.vertices());
  return {witness.count(), witness};
}

NeighborLemmaAudit neighbor_lemma_audit(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("neighbor lemma needs order >= 2");
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) throw PreconditionError("neighbor lemma needs minimum degree >= 1");
  NeighborLemmaAudit audit;
  audit.witness = zero_forcing_number(g).witness;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.neighbors(v).is_subset_of(audit.witness)) audit.violators.push_back(v);
  return audit;
}

bool min_zfs_neighbor_lemma_check(const Graph& g) { return neighbor_lemma_audit(g).holds(); }

}  // namespace pyrolace
