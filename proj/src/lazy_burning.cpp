#include "pyrolace/lazy_burning.hpp"

#include "combinations.hpp"

namespace pyrolace {

LazyBurnResult lazy_propagate(const Hypergraph& h, const VertexSet& initial, SingletonMode mode) {
  LazyBurnResult result;
  result.initial = initial & h.vertices();
  VertexSet burned = result.initial;
  for (;;) {
    std::vector<Firing> fired = firings(h, burned, mode);
    if (fired.empty()) break;
    LazyRound round;
    for (const Firing& f : fired) round.burned.set(f.vertex);
    round.firings = std::move(fired);
    burned |= round.burned;
    result.rounds.push_back(std::move(round));
  }
  result.closure = burned;
  return result;
}

VertexSet lazy_closure_async(const Hypergraph& h, const VertexSet& initial, SingletonMode mode) {
  VertexSet burned = initial & h.vertices();
  // Each hyperedge is re-examined whenever one of its vertices burns.
  std::vector<std::size_t> queue;
  for (std::size_t j = 0; j < h.edge_count(); ++j) queue.push_back(j);
  while (!queue.empty()) {
    const std::size_t j = queue.back();
    queue.pop_back();
    const VertexSet& e = h.hyperedges()[j];
    if (mode == SingletonMode::strict && e.count() < 2) continue;
    const VertexSet open = e - burned;
    if (open.count() != 1) continue;
    const std::size_t v = open.first();
    burned.set(v);
    for (std::size_t other : h.incident(v)) queue.push_back(other);
  }
  return burned;
}

bool is_lazy_burning_set(const Hypergraph& h, const VertexSet& set, SingletonMode mode) {
  return lazy_closure_async(h, set, mode) == h.vertices();
}

VertexSet forced_lazy_vertices(const Hypergraph& h, SingletonMode mode) {
  VertexSet reachable;
  for (const VertexSet& e : h.hyperedges())
    if (mode == SingletonMode::vacuous || e.count() >= 2) reachable |= e;
  return h.vertices() - reachable;
}

LazyBurningNumber lazy_burning_number(const Hypergraph& h, SingletonMode mode) {
  const VertexSet forced = forced_lazy_vertices(h, mode);
  const std::vector<std::size_t> pool = (h.vertices() - forced).to_vector();
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    LazyBurningNumber best;
    const bool found = detail::for_each_combination(pool, k, forced, [&](const VertexSet& s) {
      if (!is_lazy_burning_set(h, s, mode)) return false;
      best = {s.count(), s};
      return true;
    });
    if (found) return best;
  }
  return {h.order(), h.vertices()};  // unreachable: V(H) always works
}

bool component_additivity_check(const Hypergraph& h, SingletonMode mode) {
  std::size_t sum = 0;
  for (const auto& component : hypergraph_components(h))
    sum += lazy_burning_number(component_subhypergraph(h, component), mode).size;
  return sum == lazy_burning_number(h, mode).size;
}

}  // namespace pyrolace
