#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "pyrolace/graph.hpp"
#include "pyrolace/hypergraph.hpp"
#include "pyrolace/text_format.hpp"

namespace pyrolace {

using Json = nlohmann::ordered_json;

struct Fixture {
  std::string name;
  std::variant<LabeledGraph, LabeledHypergraph> payload;
  /// Invariant name -> expected value. Graph invariants: order, size, b, Z.
  /// Hypergraph invariants: order, edges, b_L, Z_IG, k, b.
  std::map<std::string, long long> expected;

  bool is_graph() const { return std::holds_alternative<LabeledGraph>(payload); }
  const LabeledGraph& graph() const { return std::get<LabeledGraph>(payload); }
  const LabeledHypergraph& hypergraph() const { return std::get<LabeledHypergraph>(payload); }
};

std::vector<Fixture> fixtures();
/// Throws PreconditionError for an unknown name.
Fixture fixture(const std::string& name);

LabeledGraph fig3_graph();
LabeledGraph fig7_G();
LabeledGraph fig7_H();
LabeledHypergraph fig1_hypergraph();
LabeledHypergraph fig5_hypergraph();
LabeledHypergraph fig6_hypergraph();
/// Single hyperedge on n + 1 vertices.
Hypergraph single_edge_hypergraph(std::size_t n);

enum class ClaimStatus { holds, violated, skipped };
const char* to_string(ClaimStatus status);

struct VerificationReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::skipped;
  Json lhs;  // null when not applicable
  Json rhs;
  std::optional<long long> slack;
  /// How lhs relates to rhs when the claim holds, e.g. "≤" or "=".
  std::string relation = "≤";
  /// Labeled sets, sequences and polynomials backing lhs and rhs.
  Json witnesses = Json::object();
  /// Serialized instance (string), or an object of named instances.
  Json instance;
  std::string note;
  double elapsed_ms = 0.0;

  bool holds() const { return status == ClaimStatus::holds; }
  /// One JSON-lines record. elapsed_ms is written as 0 when timing is false.
  Json to_json(bool timing = true) const;
  /// "lhs ≤ rhs (slack s)", or the status with its note.
  std::string summary() const;
};

// Z(IG(H)) <= b_L(H) + |E(H)|, lazy burning in vacuous mode.
VerificationReport verify_forcing_bound(const LabeledHypergraph& h);
// Z(IG(H)) <= b_L(H) + |E(H)| - k, vacuous mode.
VerificationReport verify_improved_bound(const LabeledHypergraph& h);
// Disjoint single hyperedges of the given sizes (each >= 2) attain equality
// in the improved bound.
VerificationReport verify_equality_family(const std::vector<std::size_t>& sizes);
// b_L(H) <= b(H), both in strict mode.
VerificationReport verify_lazy_le_burning(const LabeledHypergraph& h);
// b(G strong K_n) = b(G) when some optimal sequence of G ends in a redundant
// source; skipped otherwise.
VerificationReport verify_burning_preservation(const LabeledGraph& g, std::size_t n);
// B is lazy burning (vacuous) iff B plus the hyperedge side is zero forcing on
// IG(H), for every subset B of V(H).
VerificationReport verify_lazy_forcing_equivalence(const LabeledHypergraph& h);
// Z with component decomposition equals the undecomposed solver on IG(H).
VerificationReport verify_zero_forcing_additivity(const Graph& g);
// Synchronous and asynchronous closures agree for lazy burning (both modes)
// and zero forcing, from every subset up to the given limit.
VerificationReport verify_closure_confluence(const LabeledHypergraph& h);
// Strong product spectrum formula and adjacency identity.
VerificationReport verify_strong_product_spectrum(const Graph& g, const Graph& h, double tol = 1e-6);

struct CospectralPair {
  Graph g;
  Graph h;
  VerificationReport report;
};

/// (fig7_G strong K_n, fig7_H strong K_n) with exact cospectrality,
/// non-isomorphism and burning numbers 2 versus 3 checked.
CospectralPair generate_cospectral_pair(std::size_t n);

/// Checks every expected invariant of a fixture.
VerificationReport verify_fixture(const Fixture& f);

/// Re-validates a holding report from its instance and witnesses only,
/// without running any minimization. Only holding reports can pass.
bool recheck_report(const VerificationReport& report);

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t max_order = 8;
  std::size_t sweeps = 200;
  std::size_t spectrum_pairs = 50;
  unsigned threads = 1;
};

struct VerifySummary {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t skipped = 0;
  bool ok() const { return violated == 0; }
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Fixtures, worked examples and seeded random sweeps. Reports reach the sink
/// in a fixed order regardless of the thread count.
VerifySummary verify_all(const ReportSink& sink, const VerifyOptions& options = {});

}  // namespace pyrolace
