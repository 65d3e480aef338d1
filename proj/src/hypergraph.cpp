#include "pyrolace/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pyrolace/errors.hpp"

namespace pyrolace {

Hypergraph::Hypergraph(std::size_t order, std::vector<VertexSet> hyperedges)
    : order_(order), hyperedges_(std::move(hyperedges)) {
  if (order > VertexSet::kCapacity)
    throw CapacityError("hypergraph order " + std::to_string(order) + " exceeds capacity " +
                        std::to_string(VertexSet::kCapacity));
  const VertexSet all = vertices();
  incident_.assign(order_, {});
  for (std::size_t j = 0; j < hyperedges_.size(); ++j) {
    const VertexSet& e = hyperedges_[j];
    if (e.empty()) throw PreconditionError("hyperedge " + std::to_string(j) + " is empty");
    if (!e.is_subset_of(all))
      throw IndexError("hyperedge " + std::to_string(j) + " names a vertex >= order");
    e.for_each([&](std::size_t v) { incident_[v].push_back(j); });
  }
}

namespace {

std::vector<VertexSet> to_sets(std::size_t order,
                               const std::vector<std::vector<std::size_t>>& hyperedges) {
  std::vector<VertexSet> sets;
  sets.reserve(hyperedges.size());
  for (const auto& e : hyperedges) {
    VertexSet s;
    for (std::size_t v : e) {
      if (v >= order || v >= VertexSet::kCapacity)
        throw IndexError("hyperedge vertex " + std::to_string(v) + " out of range");
      s.set(v);
    }
    sets.push_back(s);
  }
  return sets;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t order, const std::vector<std::vector<std::size_t>>& hyperedges)
    : Hypergraph(order, to_sets(order, hyperedges)) {}

const VertexSet& Hypergraph::hyperedge(std::size_t j) const {
  if (j >= hyperedges_.size()) throw IndexError("hyperedge " + std::to_string(j) + " out of range");
  return hyperedges_[j];
}

const std::vector<std::size_t>& Hypergraph::incident(std::size_t v) const {
  if (v >= order_) throw IndexError("vertex " + std::to_string(v) + " out of range");
  return incident_[v];
}

const char* to_string(SingletonMode mode) {
  return mode == SingletonMode::vacuous ? "vacuous" : "strict";
}

std::vector<Firing> firings(const Hypergraph& h, const VertexSet& burned, SingletonMode mode) {
  std::vector<Firing> out;
  VertexSet claimed;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    const VertexSet& e = h.hyperedges()[j];
    if (mode == SingletonMode::strict && e.count() < 2) continue;
    const VertexSet open = e - burned;
    if (open.count() != 1) continue;
    const std::size_t v = open.first();
    if (claimed.test(v)) continue;
    claimed.set(v);
    out.push_back({v, j});
  }
  std::sort(out.begin(), out.end(),
            [](const Firing& a, const Firing& b) { return a.vertex < b.vertex; });
  return out;
}

VertexSet fire_step(const Hypergraph& h, const VertexSet& burned, SingletonMode mode) {
  VertexSet out;
  for (const VertexSet& e : h.hyperedges()) {
    if (mode == SingletonMode::strict && e.count() < 2) continue;
    const VertexSet open = e - burned;
    if (open.count() == 1) out |= open;
  }
  return out;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  return incidence_graph(h, VertexLabeling::numbered("v", h.order()));
}

IncidenceGraph incidence_graph(const Hypergraph& h, const VertexLabeling& vertex_labels) {
  if (vertex_labels.size() != h.order())
    throw PreconditionError("labeling size does not match hypergraph order");
  const std::size_t n = h.order();
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    h.hyperedges()[j].for_each([&](std::size_t v) { edges.emplace_back(v, n + j); });

  IncidenceGraph ig{Graph(n + h.edge_count(), edges), n, vertex_labels};
  for (std::size_t j = 1; j <= h.edge_count(); ++j) ig.labeling.add("h" + std::to_string(j));
  return ig;
}

Hypergraph hypergraph_from_incidence(const Graph& g, std::size_t split) {
  if (split > g.order()) throw PreconditionError("split exceeds graph order");
  const VertexSet vertex_side = VertexSet::range(split);
  std::vector<VertexSet> hyperedges;
  for (std::size_t node = split; node < g.order(); ++node) {
    if (!g.neighbors(node).is_subset_of(vertex_side))
      throw PreconditionError("graph is not bipartite across the split");
    hyperedges.push_back(g.neighbors(node));
  }
  return Hypergraph(split, std::move(hyperedges));
}

std::vector<HypergraphComponent> hypergraph_components(const Hypergraph& h) {
  const std::size_t n = h.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const VertexSet& e : h.hyperedges()) {
    const std::size_t anchor = e.first();
    e.for_each([&](std::size_t v) {
      const std::size_t a = find(anchor);
      const std::size_t b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  // After full compression every root is the smallest vertex of its
  // component, so iterating vertices in order yields the required ordering.
  std::vector<HypergraphComponent> components;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (slot[r] == n) {
      slot[r] = components.size();
      components.push_back({});
    }
    components[slot[r]].vertices.set(v);
  }
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    components[slot[find(h.hyperedges()[j].first())]].hyperedges.push_back(j);
  return components;
}

std::size_t count_nonsingleton_components(const Hypergraph& h) {
  std::size_t k = 0;
  for (const auto& c : hypergraph_components(h)) {
    for (std::size_t j : c.hyperedges) {
      if (h.hyperedges()[j].count() >= 2) {
        ++k;
        break;
      }
    }
  }
  return k;
}

Hypergraph component_subhypergraph(const Hypergraph& h, const HypergraphComponent& component) {
  std::vector<std::size_t> renumber(h.order(), 0);
  std::size_t next = 0;
  component.vertices.for_each([&](std::size_t v) { renumber[v] = next++; });
  std::vector<VertexSet> hyperedges;
  for (std::size_t j : component.hyperedges) {
    VertexSet e;
    h.hyperedges()[j].for_each([&](std::size_t v) { e.set(renumber[v]); });
    hyperedges.push_back(e);
  }
  return Hypergraph(next, std::move(hyperedges));
}

Hypergraph as_hypergraph(const Graph& g) {
  std::vector<VertexSet> hyperedges;
  for (auto [u, v] : g.edges()) hyperedges.push_back(VertexSet{u, v});
  return Hypergraph(g.order(), std::move(hyperedges));
}

Hypergraph disjoint_single_edges(const std::vector<std::size_t>& sizes) {
  std::vector<VertexSet> hyperedges;
  std::size_t offset = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw PreconditionError("component size must be positive");
    VertexSet e;
    for (std::size_t i = 0; i < s; ++i) e.set(offset + i);
    hyperedges.push_back(e);
    offset += s;
  }
  return Hypergraph(offset, std::move(hyperedges));
}

}  // namespace pyrolace
