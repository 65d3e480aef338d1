#include "pyrolace/burning.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "pyrolace/errors.hpp"

namespace pyrolace {

VertexSet BurnTrace::burned_after(std::size_t t) const {
  VertexSet burned;
  for (std::size_t r = 0; r < t && r < rounds.size(); ++r) {
    if (rounds[r].source) burned.set(*rounds[r].source);
    burned |= rounds[r].spread;
  }
  return burned;
}

namespace {

/// Shared round loop. `spread(prev)` returns the vertices that propagation
/// would burn given the burned set at the end of the previous round.
template <class Spread>
BurnTrace run_rounds(std::size_t order, std::span<const std::size_t> seq, Spread&& spread) {
  const VertexSet all = VertexSet::range(order);
  for (std::size_t s : seq)
    if (s >= order)
      throw IndexError("source " + std::to_string(s) + " out of range for order " +
                       std::to_string(order));

  BurnTrace trace;
  VertexSet burned;
  if (burned == all) trace.completed_in = 0;
  for (std::size_t t = 1;; ++t) {
    const bool in_sequence = t <= seq.size();
    if (!in_sequence && burned == all) break;

    const VertexSet prev = burned;
    BurnRound round;
    if (in_sequence) {
      const std::size_t s = seq[t - 1];
      if (burned.test(s)) {
        if (burned != all)
          throw PreconditionError("source " + std::to_string(s) + " in round " +
                                  std::to_string(t) + " is already burned");
      } else {
        burned.set(s);
        round.source = s;
      }
    }
    round.spread = spread(prev) - burned;
    burned |= round.spread;
    if (!in_sequence && round.spread.empty()) break;

    trace.rounds.push_back(round);
    if (burned == all && !trace.completed_in) trace.completed_in = t;
    if (t >= seq.size() && burned == all) break;
  }
  trace.final_burned = burned;
  return trace;
}

void check_indices(std::size_t order, std::span<const std::size_t> seq) {
  for (std::size_t s : seq)
    if (s >= order)
      throw IndexError("vertex " + std::to_string(s) + " out of range for order " +
                       std::to_string(order));
}

/// balls[r][v] = N_r[v] for r in [0, order).
std::vector<std::vector<VertexSet>> all_balls(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<VertexSet>> balls(std::max<std::size_t>(n, 1),
                                            std::vector<VertexSet>(n));
  for (std::size_t v = 0; v < n; ++v) balls[0][v] = VertexSet{v};
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t v = 0; v < n; ++v)
      balls[r][v] = balls[r - 1][v] | g.neighborhood(balls[r - 1][v]);
  return balls;
}

/// Depth-first search over sequences of fixed length k that satisfy the
/// distance constraint, in lexicographic order.
class SequenceSearch {
 public:
  SequenceSearch(const Graph& g, std::size_t k, bool redundant_last)
      : k_(k), redundant_last_(redundant_last), all_(g.vertices()), balls_(all_balls(g)) {
    max_ball_.assign(balls_.size(), 0);
    for (std::size_t r = 0; r < balls_.size(); ++r)
      for (const VertexSet& b : balls_[r]) max_ball_[r] = std::max(max_ball_[r], b.count());
    // capacity_[p] = most vertices positions p..k-1 can cover.
    capacity_.assign(k_ + 1, 0);
    for (std::size_t p = k_; p-- > 0;) capacity_[p] = capacity_[p + 1] + max_ball_[k_ - 1 - p];
    seq_.assign(k_, 0);
  }

  std::optional<BurningSequence> run() {
    if (extend(0, VertexSet{})) return seq_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t pos, const VertexSet& covered) {
    if (pos == k_) return covered == all_;
    if (redundant_last_ && pos == k_ - 1 && covered != all_) return false;

    // d(v, seq[j]) >= pos - j  <=>  v outside N_{pos-j-1}[seq[j]].
    VertexSet forbidden;
    for (std::size_t j = 0; j < pos; ++j) forbidden |= balls_[pos - j - 1][seq_[j]];
    const std::size_t radius = k_ - 1 - pos;

    bool done = false;
    (all_ - forbidden).for_each([&](std::size_t v) {
      if (done) return;
      const VertexSet next = covered | balls_[radius][v];
      if (all_.count() - next.count() > capacity_[pos + 1]) return;
      seq_[pos] = v;
      done = extend(pos + 1, next);
    });
    return done;
  }

  std::size_t k_;
  bool redundant_last_;
  VertexSet all_;
  std::vector<std::vector<VertexSet>> balls_;
  std::vector<std::size_t> max_ball_;
  std::vector<std::size_t> capacity_;
  BurningSequence seq_;
};

}  // namespace

BurnTrace simulate_graph_burning(const Graph& g, std::span<const std::size_t> seq) {
  return run_rounds(g.order(), seq, [&](const VertexSet& prev) { return g.neighborhood(prev); });
}

bool is_burning_sequence(const Graph& g, std::span<const std::size_t> seq) {
  check_indices(g.order(), seq);
  const std::size_t k = seq.size();
  if (k == 0) return g.order() == 0;
  VertexSet covered;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Distance d = distance(g, seq[i], seq[j]);
      if (d && *d < j - i) return false;
    }
    covered |= closed_ball(g, seq[i], k - 1 - i);
  }
  return covered == g.vertices();
}

bool sequence_burns_graph(const Graph& g, std::span<const std::size_t> seq) {
  BurnTrace trace;
  try {
    trace = simulate_graph_burning(g, seq);
  } catch (const PreconditionError&) {
    return false;
  }
  for (std::size_t t = 0; t < seq.size(); ++t)
    if (t >= trace.rounds.size() || !trace.rounds[t].source) return false;
  return trace.completed_in && *trace.completed_in <= seq.size();
}

BurningResult burning_number(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("burning number of the empty graph is undefined");
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (auto witness = SequenceSearch(g, k, false).run()) return {k, std::move(*witness)};
  }
  throw SolverError("no burning sequence found");  // unreachable: b(G) <= order
}

RedundantLastSource has_optimal_sequence_with_redundant_last_source(const Graph& g) {
  const std::size_t k = burning_number(g).rounds;
  auto witness = SequenceSearch(g, k, true).run();
  return {witness.has_value(), std::move(witness)};
}

bool is_optimal_with_redundant_last_source(const Graph& g, std::span<const std::size_t> seq) {
  if (!is_burning_sequence(g, seq) || seq.size() != burning_number(g).rounds) return false;
  const std::size_t k = seq.size();
  VertexSet covered;
  for (std::size_t j = 0; j + 1 < k; ++j) covered |= closed_ball(g, seq[j], k - 1 - j);
  return covered == g.vertices();
}

BurnTrace simulate_hypergraph_burning(const Hypergraph& h, std::span<const std::size_t> seq,
                                      SingletonMode mode) {
  return run_rounds(h.order(), seq,
                    [&](const VertexSet& prev) { return fire_step(h, prev, mode); });
}

BurningResult hypergraph_burning_number(const Hypergraph& h, SingletonMode mode) {
  if (h.order() == 0)
    throw PreconditionError("burning number of the empty hypergraph is undefined");
  const VertexSet all = h.vertices();
  BurningSequence seq;
  std::vector<std::unordered_set<VertexSet, VertexSetHash>> failed;

  // State after t rounds is fully described by the burned set, so failing
  // (t, burned) pairs are memoized per depth.
  auto search = [&](auto&& self, std::size_t t, std::size_t k, const VertexSet& burned) -> bool {
    if (burned == all) return true;
    if (t == k) return false;
    if (failed[t].contains(burned)) return false;
    const VertexSet spread = fire_step(h, burned, mode);
    bool done = false;
    (all - burned).for_each([&](std::size_t v) {
      if (done) return;
      VertexSet next = burned | spread;
      next.set(v);
      seq.push_back(v);
      done = self(self, t + 1, k, next);
      if (!done) seq.pop_back();
    });
    if (!done) failed[t].insert(burned);
    return done;
  };

  for (std::size_t k = 1; k <= h.order(); ++k) {
    failed.assign(k, {});
    seq.clear();
    if (search(search, 0, k, VertexSet{})) return {k, seq};
  }
  throw SolverError("no burning sequence found");  // unreachable: b(H) <= order
}

}  // namespace pyrolace
