#include "pyrolace/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "pyrolace/burning.hpp"
#include "pyrolace/errors.hpp"
#include "pyrolace/lazy_burning.hpp"
#include "pyrolace/random.hpp"
#include "pyrolace/spectral.hpp"
#include "pyrolace/zero_forcing.hpp"

namespace pyrolace {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json labels_of(const VertexLabeling& labels, const VertexSet& set) {
  Json out = Json::array();
  set.for_each([&](std::size_t v) { out.push_back(labels.label(v)); });
  return out;
}

Json labels_of(const VertexLabeling& labels, const BurningSequence& seq) {
  Json out = Json::array();
  for (std::size_t v : seq) out.push_back(labels.label(v));
  return out;
}

VertexSet set_from(const VertexLabeling& labels, const Json& names) {
  VertexSet out;
  for (const auto& name : names) out.set(labels.index_of(name.get<std::string>()));
  return out;
}

BurningSequence sequence_from(const VertexLabeling& labels, const Json& names) {
  BurningSequence out;
  for (const auto& name : names) out.push_back(labels.index_of(name.get<std::string>()));
  return out;
}

Json poly_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.to_strings()) out.push_back(c);
  return out;
}

LabeledGraph labeled(const Graph& g) { return with_default_labels(g); }
LabeledHypergraph labeled(const Hypergraph& h) { return with_default_labels(h); }

void finish_bound(VerificationReport& r, long long lhs, long long rhs) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.status = lhs <= rhs ? ClaimStatus::holds : ClaimStatus::violated;
}

VerificationReport bound_report(const std::string& id, const LabeledHypergraph& h, bool subtract_k) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = id;
  r.instance = serialize_hypergraph(h);
  const IncidenceGraph ig = incidence_graph(h.hypergraph, h.labels);
  const ZeroForcingNumber z = zero_forcing_number(ig.graph);
  const LazyBurningNumber bl = lazy_burning_number(h.hypergraph, SingletonMode::vacuous);
  const auto m = static_cast<long long>(h.hypergraph.edge_count());
  const auto k = static_cast<long long>(count_nonsingleton_components(h.hypergraph));
  r.witnesses["forcing_set"] = labels_of(ig.labeling, z.witness);
  r.witnesses["lazy_set"] = labels_of(h.labels, bl.witness);
  r.witnesses["edges"] = m;
  if (subtract_k) r.witnesses["k"] = k;
  finish_bound(r, static_cast<long long>(z.size),
               static_cast<long long>(bl.size) + m - (subtract_k ? k : 0));
  if (!r.holds()) r.note = "forcing number exceeds the bound";
  r.elapsed_ms = clock.ms();
  return r;
}

bool recheck_bound(const VerificationReport& r, bool subtract_k) {
  const LabeledHypergraph h = parse_hypergraph(r.instance.get<std::string>());
  const IncidenceGraph ig = incidence_graph(h.hypergraph, h.labels);
  const VertexSet forcing = set_from(ig.labeling, r.witnesses.at("forcing_set"));
  const VertexSet lazy = set_from(h.labels, r.witnesses.at("lazy_set"));
  if (!is_zero_forcing_set(ig.graph, forcing)) return false;
  if (!is_lazy_burning_set(h.hypergraph, lazy, SingletonMode::vacuous)) return false;
  const auto m = static_cast<long long>(h.hypergraph.edge_count());
  const auto k = subtract_k ? static_cast<long long>(count_nonsingleton_components(h.hypergraph)) : 0;
  if (r.witnesses.at("edges").get<long long>() != m) return false;
  if (subtract_k && r.witnesses.at("k").get<long long>() != k) return false;
  const auto lhs = r.lhs.get<long long>();
  const auto rhs = r.rhs.get<long long>();
  return lhs == static_cast<long long>(forcing.count()) &&
         rhs == static_cast<long long>(lazy.count()) + m - k && lhs <= rhs &&
         r.slack == rhs - lhs;
}

bool covers_without_last(const Graph& g, const BurningSequence& seq) {
  if (seq.empty()) return false;
  const std::size_t k = seq.size();
  VertexSet covered;
  for (std::size_t j = 0; j + 1 < k; ++j) covered |= closed_ball(g, seq[j], k - 1 - j);
  return covered == g.vertices();
}

constexpr std::size_t lazy_vertices_cap = 12;

}  // namespace

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::holds:
      return "holds";
    case ClaimStatus::violated:
      return "violated";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

Json VerificationReport::to_json(bool timing) const {
  Json out;
  out["claim_id"] = claim_id;
  out["status"] = to_string(status);
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  out["slack"] = slack ? Json(*slack) : Json(nullptr);
  out["witnesses"] = witnesses;
  out["instance"] = instance;
  if (!note.empty()) out["note"] = note;
  out["elapsed_ms"] = timing ? elapsed_ms : 0.0;
  return out;
}

std::string VerificationReport::summary() const {
  if (status == ClaimStatus::skipped) return "skipped: " + note;
  std::ostringstream out;
  if (!lhs.is_null() && !rhs.is_null() && !lhs.is_structured() && !rhs.is_structured()) {
    out << lhs.dump() << ' ' << (holds() ? relation : std::string("violates ") + relation) << ' '
        << rhs.dump();
    if (slack) out << " (slack " << *slack << ')';
  } else {
    out << to_string(status);
  }
  if (!holds() && !note.empty()) out << ": " << note;
  return out.str();
}

LabeledGraph fig3_graph() {
  return {Graph(8, {{0, 1}, {1, 2}, {1, 3}, {1, 5}, {3, 4}, {5, 6}, {5, 7}, {6, 7}}),
          VertexLabeling::numbered("v", 8)};
}

LabeledGraph fig7_G() {
  return {Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 5}}),
          VertexLabeling::numbered("v", 6)};
}

LabeledGraph fig7_H() {
  return {Graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}),
          VertexLabeling::numbered("v", 6)};
}

LabeledHypergraph fig1_hypergraph() {
  return {Hypergraph(4, std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 3}, {2, 3}}),
          VertexLabeling::numbered("v", 4)};
}

LabeledHypergraph fig5_hypergraph() {
  return {Hypergraph(7, std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5, 6}}),
          VertexLabeling::numbered("v", 7)};
}

LabeledHypergraph fig6_hypergraph() {
  return {Hypergraph(4, std::vector<std::vector<std::size_t>>{{1, 2, 3}, {0, 1, 2, 3}}),
          VertexLabeling::numbered("v", 4)};
}

Hypergraph single_edge_hypergraph(std::size_t n) { return disjoint_single_edges({n + 1}); }

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  out.push_back({"fig1_hypergraph", fig1_hypergraph(),
                 {{"order", 4}, {"edges", 3}, {"b_L", 1}, {"Z_IG", 2}, {"k", 1}, {"b", 2}}});
  out.push_back({"fig3_graph", fig3_graph(), {{"order", 8}, {"size", 8}, {"b", 3}}});
  out.push_back({"fig5_hypergraph", fig5_hypergraph(),
                 {{"order", 7}, {"edges", 2}, {"b_L", 5}, {"Z_IG", 5}, {"k", 2}}});
  out.push_back({"fig6_hypergraph", fig6_hypergraph(),
                 {{"order", 4}, {"edges", 2}, {"b_L", 2}, {"Z_IG", 3}, {"k", 1}}});
  out.push_back({"fig7_G", fig7_G(), {{"order", 6}, {"size", 7}, {"b", 2}}});
  out.push_back({"fig7_H", fig7_H(), {{"order", 6}, {"size", 7}, {"b", 3}}});
  out.push_back({"P_4", labeled(path_graph(4)), {{"order", 4}, {"size", 3}, {"b", 2}, {"Z", 1}}});
  out.push_back({"P_9", labeled(path_graph(9)), {{"order", 9}, {"size", 8}, {"b", 3}, {"Z", 1}}});
  out.push_back({"K_4", labeled(complete_graph(4)), {{"order", 4}, {"size", 6}, {"b", 2}, {"Z", 3}}});
  out.push_back({"H_3", labeled(single_edge_hypergraph(3)),
                 {{"order", 4}, {"edges", 1}, {"b_L", 3}, {"Z_IG", 3}, {"k", 1}}});
  return out;
}

Fixture fixture(const std::string& name) {
  for (auto& f : fixtures())
    if (f.name == name) return f;
  throw PreconditionError("unknown fixture '" + name + "'");
}

VerificationReport verify_forcing_bound(const LabeledHypergraph& h) {
  return bound_report("forcing_bound", h, false);
}

VerificationReport verify_improved_bound(const LabeledHypergraph& h) {
  return bound_report("improved_bound", h, true);
}

VerificationReport verify_equality_family(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw PreconditionError("equality family needs at least one size");
  for (std::size_t s : sizes)
    if (s < 2) throw PreconditionError("equality family sizes must be >= 2");
  VerificationReport r = bound_report("equality_family", labeled(disjoint_single_edges(sizes)), true);
  r.relation = "=";
  if (r.slack != 0) {
    r.status = ClaimStatus::violated;
    r.note = "bound is not tight";
  }
  return r;
}

VerificationReport verify_lazy_le_burning(const LabeledHypergraph& h) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "lazy_le_burning";
  r.instance = serialize_hypergraph(h);
  const LazyBurningNumber bl = lazy_burning_number(h.hypergraph, SingletonMode::strict);
  const BurningResult b = hypergraph_burning_number(h.hypergraph, SingletonMode::strict);
  r.witnesses["lazy_set"] = labels_of(h.labels, bl.witness);
  r.witnesses["sequence"] = labels_of(h.labels, b.witness);
  finish_bound(r, static_cast<long long>(bl.size), static_cast<long long>(b.rounds));
  if (!r.holds()) r.note = "lazy burning number exceeds burning number";
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport verify_burning_preservation(const LabeledGraph& g, std::size_t n) {
  if (n == 0) throw PreconditionError("K_n needs n >= 1");
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "burning_preservation";
  r.relation = "=";
  r.instance = Json{{"G", serialize_graph(g)}, {"n", n}};
  const BurningResult base = burning_number(g.graph);
  r.witnesses["sequence"] = labels_of(g.labels, base.witness);
  const RedundantLastSource redundant = has_optimal_sequence_with_redundant_last_source(g.graph);
  if (!redundant.found) {
    r.status = ClaimStatus::skipped;
    r.rhs = static_cast<long long>(base.rounds);
    r.note = "no optimal sequence ends in a redundant source";
    r.elapsed_ms = clock.ms();
    return r;
  }
  r.witnesses["redundant_sequence"] = labels_of(g.labels, *redundant.witness);
  const ProductGraph product = strong_product(g.graph, complete_graph(n));
  const VertexLabeling product_labels =
      product_labeling(g.labels, VertexLabeling::numbered("w", n));
  const BurningResult lifted = burning_number(product.graph);
  r.witnesses["product_sequence"] = labels_of(product_labels, lifted.witness);
  r.lhs = static_cast<long long>(lifted.rounds);
  r.rhs = static_cast<long long>(base.rounds);
  r.slack = 0;
  r.status = lifted.rounds == base.rounds ? ClaimStatus::holds : ClaimStatus::violated;
  if (!r.holds()) {
    r.slack = static_cast<long long>(base.rounds) - static_cast<long long>(lifted.rounds);
    r.note = "burning number changed under the strong product";
  }
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport verify_lazy_forcing_equivalence(const LabeledHypergraph& h) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "lazy_forcing_equivalence";
  r.relation = "=";
  r.instance = serialize_hypergraph(h);
  const std::size_t n = h.hypergraph.order();
  if (n > lazy_vertices_cap) {
    r.status = ClaimStatus::skipped;
    r.note = "order above exhaustive cap";
    return r;
  }
  const IncidenceGraph ig = incidence_graph(h.hypergraph, h.labels);
  const VertexSet edge_side = ig.hyperedge_side();
  std::uint64_t agree = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  r.status = ClaimStatus::holds;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    VertexSet b;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) b.set(v);
    const bool lazy = is_lazy_burning_set(h.hypergraph, b, SingletonMode::vacuous);
    const bool forcing = is_zero_forcing_set(ig.graph, b | edge_side);
    if (lazy == forcing) {
      ++agree;
    } else if (r.holds()) {
      r.status = ClaimStatus::violated;
      r.witnesses["set"] = labels_of(h.labels, b);
      r.witnesses["lazy"] = lazy;
      r.witnesses["forcing"] = forcing;
      r.note = "lazy burning and forcing disagree on the recorded set";
    }
  }
  r.lhs = agree;
  r.rhs = total;
  r.slack = static_cast<long long>(total - agree);
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport verify_zero_forcing_additivity(const Graph& g) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "zero_forcing_additivity";
  r.relation = "=";
  const LabeledGraph lg = labeled(g);
  r.instance = serialize_graph(lg);
  const ZeroForcingNumber split = zero_forcing_number(g);
  const ZeroForcingNumber whole = zero_forcing_number_undecomposed(g);
  r.witnesses["component_set"] = labels_of(lg.labels, split.witness);
  r.witnesses["whole_set"] = labels_of(lg.labels, whole.witness);
  r.lhs = static_cast<long long>(split.size);
  r.rhs = static_cast<long long>(whole.size);
  r.slack = static_cast<long long>(whole.size) - static_cast<long long>(split.size);
  r.status = split.size == whole.size ? ClaimStatus::holds : ClaimStatus::violated;
  if (!r.holds()) r.note = "component sum differs from the whole-graph minimum";
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport verify_closure_confluence(const LabeledHypergraph& h) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "closure_confluence";
  r.relation = "=";
  r.instance = serialize_hypergraph(h);
  const std::size_t n = h.hypergraph.order();
  const IncidenceGraph ig = incidence_graph(h.hypergraph, h.labels);
  const std::size_t ig_order = ig.graph.order();
  if (n > lazy_vertices_cap || ig_order > 16) {
    r.status = ClaimStatus::skipped;
    r.note = "order above exhaustive cap";
    return r;
  }
  std::uint64_t checked = 0;
  std::uint64_t agree = 0;
  auto record = [&](bool same, const char* process, const Json& set) {
    ++checked;
    if (same) {
      ++agree;
    } else if (!r.witnesses.contains("set")) {
      r.witnesses["process"] = process;
      r.witnesses["set"] = set;
    }
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet b;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) b.set(v);
    for (SingletonMode mode : {SingletonMode::vacuous, SingletonMode::strict}) {
      const bool same =
          lazy_propagate(h.hypergraph, b, mode).closure == lazy_closure_async(h.hypergraph, b, mode);
      record(same, to_string(mode), labels_of(h.labels, b));
    }
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ig_order); ++mask) {
    VertexSet b;
    for (std::size_t v = 0; v < ig_order; ++v)
      if ((mask >> v) & 1U) b.set(v);
    const bool same = force_closure(ig.graph, b).final == force_closure_async(ig.graph, b);
    record(same, "forcing", labels_of(ig.labeling, b));
  }
  r.lhs = agree;
  r.rhs = checked;
  r.slack = static_cast<long long>(checked - agree);
  r.status = agree == checked ? ClaimStatus::holds : ClaimStatus::violated;
  if (!r.holds()) r.note = "synchronous and asynchronous closures differ";
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport verify_strong_product_spectrum(const Graph& g, const Graph& h, double tol) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "strong_product_spectrum";
  r.instance = Json{{"G", serialize_graph(labeled(g))}, {"H", serialize_graph(labeled(h))}};
  const auto predicted = strong_product_spectrum_prediction(spectrum_approx(g), spectrum_approx(h));
  const auto computed = spectrum_approx(strong_product(g, h).graph).eigenvalues;
  double deviation = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    deviation = std::max(deviation, std::abs(predicted[i] - computed[i]));
  const bool identity = strong_product_matrix_identity(g, h);
  r.witnesses["matrix_identity"] = identity;
  r.witnesses["predicted"] = predicted;
  r.witnesses["computed"] = computed;
  r.lhs = deviation;
  r.rhs = tol;
  r.status = identity && deviation <= tol && predicted.size() == computed.size()
                 ? ClaimStatus::holds
                 : ClaimStatus::violated;
  if (!r.holds()) r.note = identity ? "spectra differ" : "adjacency identity fails";
  r.elapsed_ms = clock.ms();
  return r;
}

CospectralPair generate_cospectral_pair(std::size_t n) {
  if (n == 0) throw PreconditionError("K_n needs n >= 1");
  Stopwatch clock;
  const LabeledGraph base_g = fig7_G();
  const LabeledGraph base_h = fig7_H();
  const VertexLabeling kn = VertexLabeling::numbered("w", n);
  const Graph g = strong_product(base_g.graph, complete_graph(n)).graph;
  const Graph h = strong_product(base_h.graph, complete_graph(n)).graph;
  const VertexLabeling labels_g = product_labeling(base_g.labels, kn);
  const VertexLabeling labels_h = product_labeling(base_h.labels, kn);

  VerificationReport r;
  r.claim_id = "cospectral_pair";
  r.relation = "<";
  r.instance = Json{{"n", n},
                    {"G", serialize_graph({g, labels_g})},
                    {"H", serialize_graph({h, labels_h})}};
  const IntPolynomial pg = char_poly(g);
  const IntPolynomial ph = char_poly(h);
  const bool cospectral = pg == ph;
  const auto dg = degree_sequence(g);
  const auto dh = degree_sequence(h);
  bool non_isomorphic = dg != dh;
  if (!non_isomorphic && g.order() <= 10) non_isomorphic = !are_isomorphic_bruteforce(g, h);
  const BurningResult bg = burning_number(g);
  const BurningResult bh = burning_number(h);
  r.witnesses["polynomial_G"] = poly_json(pg);
  r.witnesses["polynomial_H"] = poly_json(ph);
  r.witnesses["degrees_G"] = dg;
  r.witnesses["degrees_H"] = dh;
  r.witnesses["sequence_G"] = labels_of(labels_g, bg.witness);
  r.witnesses["sequence_H"] = labels_of(labels_h, bh.witness);
  r.lhs = static_cast<long long>(bg.rounds);
  r.rhs = static_cast<long long>(bh.rounds);
  r.slack = static_cast<long long>(bh.rounds) - static_cast<long long>(bg.rounds);
  const bool burning_ok = bg.rounds == 2 && bh.rounds == 3;
  r.status = cospectral && non_isomorphic && burning_ok ? ClaimStatus::holds : ClaimStatus::violated;
  if (!cospectral) r.note = "characteristic polynomials differ";
  else if (!non_isomorphic) r.note = "graphs are isomorphic";
  else if (!burning_ok) r.note = "burning numbers are not 2 and 3";
  r.elapsed_ms = clock.ms();
  return {g, h, std::move(r)};
}

VerificationReport verify_fixture(const Fixture& f) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "fixture:" + f.name;
  r.relation = "=";
  Json computed = Json::object();
  Json expected = Json::object();
  std::vector<std::string> mismatched;
  for (const auto& [key, want] : f.expected) {
    long long got = -1;
    if (f.is_graph()) {
      const LabeledGraph& g = f.graph();
      r.instance = serialize_graph(g);
      if (key == "order") got = static_cast<long long>(g.graph.order());
      else if (key == "size") got = static_cast<long long>(g.graph.size());
      else if (key == "b") {
        const BurningResult b = burning_number(g.graph);
        got = static_cast<long long>(b.rounds);
        r.witnesses["sequence"] = labels_of(g.labels, b.witness);
      } else if (key == "Z") {
        const ZeroForcingNumber z = zero_forcing_number(g.graph);
        got = static_cast<long long>(z.size);
        r.witnesses["forcing_set"] = labels_of(g.labels, z.witness);
      } else {
        throw PreconditionError("unknown graph invariant '" + key + "'");
      }
    } else {
      const LabeledHypergraph& h = f.hypergraph();
      r.instance = serialize_hypergraph(h);
      if (key == "order") got = static_cast<long long>(h.hypergraph.order());
      else if (key == "edges") got = static_cast<long long>(h.hypergraph.edge_count());
      else if (key == "k") got = static_cast<long long>(count_nonsingleton_components(h.hypergraph));
      else if (key == "b_L") {
        const LazyBurningNumber bl = lazy_burning_number(h.hypergraph, SingletonMode::vacuous);
        got = static_cast<long long>(bl.size);
        r.witnesses["lazy_set"] = labels_of(h.labels, bl.witness);
      } else if (key == "Z_IG") {
        const IncidenceGraph ig = incidence_graph(h.hypergraph, h.labels);
        const ZeroForcingNumber z = zero_forcing_number(ig.graph);
        got = static_cast<long long>(z.size);
        r.witnesses["forcing_set"] = labels_of(ig.labeling, z.witness);
      } else if (key == "b") {
        const BurningResult b = hypergraph_burning_number(h.hypergraph, SingletonMode::strict);
        got = static_cast<long long>(b.rounds);
        r.witnesses["sequence"] = labels_of(h.labels, b.witness);
      } else {
        throw PreconditionError("unknown hypergraph invariant '" + key + "'");
      }
    }
    computed[key] = got;
    expected[key] = want;
    if (got != want) mismatched.push_back(key);
  }
  r.lhs = computed;
  r.rhs = expected;
  r.status = mismatched.empty() ? ClaimStatus::holds : ClaimStatus::violated;
  for (const auto& key : mismatched)
    r.note += (r.note.empty() ? "mismatch: " : ", ") + key + " computed " +
              computed[key].dump() + " expected " + expected[key].dump();
  r.elapsed_ms = clock.ms();
  return r;
}

bool recheck_report(const VerificationReport& r) {
  if (!r.holds()) return false;
  try {
    const std::string& id = r.claim_id;
    if (id == "forcing_bound") return recheck_bound(r, false);
    if (id == "improved_bound") return recheck_bound(r, true);
    if (id == "equality_family") return recheck_bound(r, true) && r.slack == 0;
    if (id == "lazy_le_burning") {
      const LabeledHypergraph h = parse_hypergraph(r.instance.get<std::string>());
      const VertexSet lazy = set_from(h.labels, r.witnesses.at("lazy_set"));
      const BurningSequence seq = sequence_from(h.labels, r.witnesses.at("sequence"));
      const BurnTrace trace = simulate_hypergraph_burning(h.hypergraph, seq, SingletonMode::strict);
      const auto lhs = r.lhs.get<long long>();
      const auto rhs = r.rhs.get<long long>();
      return is_lazy_burning_set(h.hypergraph, lazy, SingletonMode::strict) &&
             lhs == static_cast<long long>(lazy.count()) && trace.completed_in &&
             static_cast<long long>(*trace.completed_in) <= rhs && lhs <= rhs;
    }
    if (id == "burning_preservation") {
      const LabeledGraph g = parse_graph(r.instance.at("G").get<std::string>());
      const auto n = r.instance.at("n").get<std::size_t>();
      const BurningSequence seq = sequence_from(g.labels, r.witnesses.at("sequence"));
      const BurningSequence redundant = sequence_from(g.labels, r.witnesses.at("redundant_sequence"));
      const ProductGraph product = strong_product(g.graph, complete_graph(n));
      const VertexLabeling product_labels =
          product_labeling(g.labels, VertexLabeling::numbered("w", n));
      const BurningSequence lifted = sequence_from(product_labels, r.witnesses.at("product_sequence"));
      const auto k = r.rhs.get<long long>();
      return is_burning_sequence(g.graph, seq) && static_cast<long long>(seq.size()) == k &&
             is_burning_sequence(g.graph, redundant) &&
             static_cast<long long>(redundant.size()) == k && covers_without_last(g.graph, redundant) &&
             is_burning_sequence(product.graph, lifted) &&
             static_cast<long long>(lifted.size()) == r.lhs.get<long long>() &&
             r.lhs.get<long long>() == k;
    }
    if (id == "cospectral_pair") {
      const LabeledGraph g = parse_graph(r.instance.at("G").get<std::string>());
      const LabeledGraph h = parse_graph(r.instance.at("H").get<std::string>());
      const Json pg = poly_json(char_poly(g.graph));
      const Json ph = poly_json(char_poly(h.graph));
      const BurningSequence sg = sequence_from(g.labels, r.witnesses.at("sequence_G"));
      const BurningSequence sh = sequence_from(h.labels, r.witnesses.at("sequence_H"));
      return pg == r.witnesses.at("polynomial_G") && ph == r.witnesses.at("polynomial_H") &&
             pg == ph && degree_sequence(g.graph) != degree_sequence(h.graph) &&
             is_burning_sequence(g.graph, sg) && sg.size() == 2 &&
             is_burning_sequence(h.graph, sh) && sh.size() == 3;
    }
    if (id == "lazy_forcing_equivalence") {
      const LabeledHypergraph h = parse_hypergraph(r.instance.get<std::string>());
      return verify_lazy_forcing_equivalence(h).holds();
    }
    if (id == "closure_confluence") {
      const LabeledHypergraph h = parse_hypergraph(r.instance.get<std::string>());
      return verify_closure_confluence(h).holds();
    }
    if (id == "zero_forcing_additivity") {
      const LabeledGraph g = parse_graph(r.instance.get<std::string>());
      const VertexSet a = set_from(g.labels, r.witnesses.at("component_set"));
      const VertexSet b = set_from(g.labels, r.witnesses.at("whole_set"));
      return is_zero_forcing_set(g.graph, a) && is_zero_forcing_set(g.graph, b) &&
             a.count() == b.count() && r.lhs.get<long long>() == static_cast<long long>(a.count());
    }
    if (id == "strong_product_spectrum") {
      const LabeledGraph g = parse_graph(r.instance.at("G").get<std::string>());
      const LabeledGraph h = parse_graph(r.instance.at("H").get<std::string>());
      const auto predicted = r.witnesses.at("predicted").get<std::vector<double>>();
      const auto computed = r.witnesses.at("computed").get<std::vector<double>>();
      return strong_product_matrix_identity(g.graph, h.graph) &&
             spectra_match(predicted, computed, r.rhs.get<double>());
    }
    if (id.rfind("fixture:", 0) == 0) return r.lhs == r.rhs;
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

VerifySummary verify_all(const ReportSink& sink, const VerifyOptions& options) {
  using Job = std::function<std::vector<VerificationReport>()>;
  std::vector<Job> jobs;

  for (const Fixture& f : fixtures())
    jobs.push_back([f] { return std::vector{verify_fixture(f)}; });

  jobs.push_back([] {
    const LabeledHypergraph h1 = fig1_hypergraph();
    const LabeledHypergraph h5 = fig5_hypergraph();
    const LabeledHypergraph h6 = fig6_hypergraph();
    return std::vector{verify_forcing_bound(h1),
                       verify_forcing_bound(labeled(single_edge_hypergraph(3))),
                       verify_improved_bound(h1),
                       verify_improved_bound(h5),
                       verify_improved_bound(h6),
                       verify_lazy_le_burning(h1),
                       verify_lazy_forcing_equivalence(h1),
                       verify_lazy_forcing_equivalence(h5),
                       verify_lazy_forcing_equivalence(h6)};
  });
  for (const auto& sizes : std::vector<std::vector<std::size_t>>{{3, 4}, {4}, {2, 2, 2}, {5, 6}})
    jobs.push_back([sizes] { return std::vector{verify_equality_family(sizes)}; });
  jobs.push_back([] {
    std::vector<VerificationReport> out;
    for (std::size_t n = 1; n <= 3; ++n) out.push_back(verify_burning_preservation(fig3_graph(), n));
    out.push_back(verify_burning_preservation(fig7_G(), 2));
    out.push_back(verify_burning_preservation(fig7_H(), 2));
    out.push_back(verify_burning_preservation(labeled(complete_graph(4)), 2));
    out.push_back(verify_burning_preservation(labeled(path_graph(9)), 2));
    return out;
  });
  for (std::size_t n = 1; n <= 3; ++n)
    jobs.push_back([n] { return std::vector{generate_cospectral_pair(n).report}; });

  // Instances are drawn up front so the stream of draws does not depend on
  // the schedule.
  SplitMix64 rng(options.seed);
  const std::size_t cap = std::max<std::size_t>(1, std::min<std::size_t>(options.max_order, 10));
  for (std::size_t i = 0; i < options.sweeps; ++i) {
    const std::size_t order = 1 + rng.below(cap);
    const std::size_t edges = rng.below(6);
    const LabeledHypergraph h = labeled(random_hypergraph(rng, order, edges, order));
    jobs.push_back([h, i] {
      const VerificationReport basic = verify_forcing_bound(h);
      const VerificationReport improved = verify_improved_bound(h);
      VerificationReport identity;
      identity.claim_id = "bound_slack_identity";
      identity.relation = "=";
      identity.instance = improved.instance;
      identity.lhs = *basic.slack - *improved.slack;
      identity.rhs = improved.witnesses.at("k");
      identity.status = identity.lhs == identity.rhs ? ClaimStatus::holds : ClaimStatus::violated;
      std::vector<VerificationReport> out{verify_lazy_forcing_equivalence(h), basic, improved, identity,
                                          verify_lazy_le_burning(h),
                                          verify_zero_forcing_additivity(incidence_graph(h.hypergraph).graph),
                                          verify_closure_confluence(h)};
      for (auto& r : out) r.note = r.note.empty() ? "sweep " + std::to_string(i) : r.note;
      return out;
    });
  }
  for (std::size_t i = 0; i < options.spectrum_pairs; ++i) {
    const Graph g = random_graph(rng, 1 + rng.below(5), 0.5);
    const Graph h = random_graph(rng, 1 + rng.below(5), 0.5);
    jobs.push_back([g, h] { return std::vector{verify_strong_product_spectrum(g, h)}; });
  }

  VerifySummary summary;
  auto emit = [&](const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
      switch (r.status) {
        case ClaimStatus::holds:
          ++summary.holds;
          break;
        case ClaimStatus::violated:
          ++summary.violated;
          break;
        case ClaimStatus::skipped:
          ++summary.skipped;
          break;
      }
      if (sink) sink(r);
    }
  };

  if (options.threads <= 1) {
    for (const Job& job : jobs) emit(job());
    return summary;
  }
  std::vector<std::vector<VerificationReport>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    emit(results[i]);
  }
  return summary;
}

}  // namespace pyrolace
