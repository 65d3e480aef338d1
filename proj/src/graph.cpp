#include "pyrolace/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pyrolace/errors.hpp"

namespace pyrolace {

Graph::Graph(std::size_t order) : Graph(order, std::span<const Edge>{}) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : order_(order) {
  if (order > VertexSet::kCapacity)
    throw CapacityError("graph order " + std::to_string(order) + " exceeds capacity " +
                        std::to_string(VertexSet::kCapacity));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  neighbor_sets_.assign(order_, VertexSet{});
  adjacency_.assign(order_, {});
  for (auto [u, v] : edges_) {
    neighbor_sets_[u].set(v);
    neighbor_sets_[v].set(u);
  }
  for (std::size_t v = 0; v < order_; ++v) adjacency_[v] = neighbor_sets_[v].to_vector();
}

void Graph::check_vertex(std::size_t v) const {
  if (v >= order_)
    throw IndexError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
}

const VertexSet& Graph::neighbors(std::size_t v) const {
  check_vertex(v);
  return neighbor_sets_[v];
}

const std::vector<std::size_t>& Graph::adjacency(std::size_t v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return neighbor_sets_[u].test(v);
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out;
  s.for_each([&](std::size_t v) {
    if (v < order_) out |= neighbor_sets_[v];
  });
  return out;
}

Graph Graph::with_edge(std::size_t u, std::size_t v) const {
  std::vector<Edge> edges = edges_;
  edges.emplace_back(u, v);
  return Graph(order_, edges);
}

VertexSet closed_ball(const Graph& g, std::size_t v, std::size_t radius) {
  if (v >= g.order()) throw IndexError("vertex " + std::to_string(v) + " out of range");
  VertexSet ball{v};
  for (std::size_t r = 0; r < radius; ++r) {
    VertexSet grown = ball | g.neighborhood(ball);
    if (grown == ball) break;
    ball = grown;
  }
  return ball;
}

Distance distance(const Graph& g, std::size_t u, std::size_t v) {
  if (u >= g.order() || v >= g.order())
    throw IndexError("vertex out of range for order " + std::to_string(g.order()));
  VertexSet frontier{u};
  VertexSet seen = frontier;
  for (std::size_t d = 0;; ++d) {
    if (frontier.test(v)) return d;
    frontier = g.neighborhood(frontier) - seen;
    if (frontier.empty()) return std::nullopt;
    seen |= frontier;
  }
}

std::vector<std::vector<Distance>> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Distance>> dist(n, std::vector<Distance>(n));
  for (std::size_t s = 0; s < n; ++s) {
    VertexSet frontier{s};
    VertexSet seen = frontier;
    for (std::size_t d = 0; !frontier.empty(); ++d) {
      frontier.for_each([&](std::size_t v) { dist[s][v] = d; });
      frontier = g.neighborhood(frontier) - seen;
      seen |= frontier;
    }
  }
  return dist;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> components;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    VertexSet component{unvisited.first()};
    for (;;) {
      VertexSet grown = component | g.neighborhood(component);
      if (grown == component) break;
      component = grown;
    }
    unvisited -= component;
    components.push_back(component);
  }
  return components;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

bool are_isomorphic_bruteforce(const Graph& g, const Graph& h, std::size_t max_order) {
  if (g.order() != h.order())
    throw PreconditionError("isomorphism test needs equal orders (" +
                            std::to_string(g.order()) + " vs " + std::to_string(h.order()) + ")");
  if (g.order() > max_order)
    throw PreconditionError("isomorphism test limited to order " + std::to_string(max_order));
  if (g.size() != h.size() || degree_sequence(g) != degree_sequence(h)) return false;

  const std::size_t n = g.order();
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);

  // Assign g-vertex i to an unused h-vertex of equal degree whose adjacency to
  // already-placed vertices matches.
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || h.degree(c) != g.degree(i)) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < i && consistent; ++j)
        consistent = g.has_edge(i, j) == h.has_edge(c, image[j]);
      if (!consistent) continue;
      used[c] = true;
      image[i] = c;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(0);
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

}  // namespace pyrolace
