#include "pyrolace/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "pyrolace/burning.hpp"
#include "pyrolace/harness.hpp"
#include "pyrolace/lazy_burning.hpp"
#include "pyrolace/spectral.hpp"
#include "pyrolace/text_format.hpp"
#include "pyrolace/zero_forcing.hpp"

#ifndef PYROLACE_DEFAULT_FIXTURE_DIR
#define PYROLACE_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace pyrolace::cli {

namespace {

std::vector<std::string> split_labels(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& chunk : raw) {
    std::string token;
    for (char c : chunk + ",") {
      if (c == ',' || c == ' ') {
        if (!token.empty()) out.push_back(std::move(token));
        token.clear();
      } else {
        token += c;
      }
    }
  }
  return out;
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

LabeledHypergraph load_hypergraph(const std::filesystem::path& path) {
  return parse_hypergraph(read_text_file(path));
}

SingletonMode mode_or(const std::string& mode, SingletonMode fallback) {
  if (mode.empty()) return fallback;
  return mode == "vacuous" ? SingletonMode::vacuous : SingletonMode::strict;
}

VertexSet set_of(const VertexLabeling& labels, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& name : names) {
    auto v = labels.find(name);
    if (!v) throw UsageError("unknown vertex label '" + name + "'");
    out.set(*v);
  }
  return out;
}

BurningSequence sequence_of(const VertexLabeling& labels, const std::vector<std::string>& names) {
  BurningSequence out;
  for (const auto& name : names) {
    auto v = labels.find(name);
    if (!v) throw UsageError("unknown vertex label '" + name + "'");
    out.push_back(*v);
  }
  return out;
}

std::string joined(const VertexLabeling& labels, const VertexSet& set) {
  const std::string s = labels.join(set.to_vector());
  return s.empty() ? "-" : s;
}

class ReportWriter {
 public:
  ReportWriter(const std::optional<std::filesystem::path>& path, bool timing) : timing_(timing) {
    if (!path) return;
    file_.open(*path, std::ios::binary);
    if (!file_) throw UsageError("cannot write report '" + path->string() + "'");
  }

  void write(const Json& record) {
    if (file_.is_open()) file_ << record.dump() << '\n';
  }
  void write(const VerificationReport& r) { write(r.to_json(timing_)); }

 private:
  bool timing_;
  std::ofstream file_;
};

void print_trace(std::ostream& out, const VertexLabeling& labels, const BurnTrace& trace) {
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const BurnRound& round = trace.rounds[t];
    out << "round " << t + 1 << ": source "
        << (round.source ? labels.label(*round.source) : std::string("-")) << ", spread "
        << joined(labels, round.spread) << '\n';
  }
}

int run_burn(const Command& cmd, std::ostream& out, ReportWriter& report) {
  Json record{{"command", "burn"}};
  if (cmd.graph) {
    const LabeledGraph g = load_graph(*cmd.graph);
    if (!cmd.sequence.empty()) {
      const BurningSequence seq = sequence_of(g.labels, cmd.sequence);
      const BurnTrace trace = simulate_graph_burning(g.graph, seq);
      print_trace(out, g.labels, trace);
      const bool valid = is_burning_sequence(g.graph, seq);
      out << "burning sequence: " << (valid ? "yes" : "no") << '\n';
      record["sequence"] = cmd.sequence;
      record["burning_sequence"] = valid;
      if (trace.completed_in) record["completed_in"] = *trace.completed_in;
    } else {
      const BurningResult b = burning_number(g.graph);
      out << "b = " << b.rounds << ", witness " << g.labels.join(b.witness) << '\n';
      record["b"] = b.rounds;
      record["witness"] = Json::array();
      for (std::size_t v : b.witness) record["witness"].push_back(g.labels.label(v));
      if (cmd.redundant) {
        const RedundantLastSource r = has_optimal_sequence_with_redundant_last_source(g.graph);
        out << "redundant last source: " << (r.found ? "yes" : "no");
        if (r.found) out << ", witness " << g.labels.join(*r.witness);
        out << '\n';
        record["redundant_last_source"] = r.found;
      }
    }
  } else {
    const LabeledHypergraph h = load_hypergraph(*cmd.hypergraph);
    const SingletonMode mode = mode_or(cmd.mode, SingletonMode::strict);
    record["mode"] = to_string(mode);
    if (!cmd.sequence.empty()) {
      const BurningSequence seq = sequence_of(h.labels, cmd.sequence);
      const BurnTrace trace = simulate_hypergraph_burning(h.hypergraph, seq, mode);
      print_trace(out, h.labels, trace);
      out << "burned: " << joined(h.labels, trace.final_burned) << '\n';
      record["sequence"] = cmd.sequence;
      if (trace.completed_in) record["completed_in"] = *trace.completed_in;
    } else {
      const BurningResult b = hypergraph_burning_number(h.hypergraph, mode);
      out << "b = " << b.rounds << ", witness " << h.labels.join(b.witness) << '\n';
      record["b"] = b.rounds;
      record["witness"] = Json::array();
      for (std::size_t v : b.witness) record["witness"].push_back(h.labels.label(v));
    }
  }
  report.write(record);
  return 0;
}

int run_lazy(const Command& cmd, std::ostream& out, ReportWriter& report) {
  const LabeledHypergraph h = load_hypergraph(*cmd.hypergraph);
  const SingletonMode mode = mode_or(cmd.mode, SingletonMode::vacuous);
  Json record{{"command", "lazy"}, {"mode", to_string(mode)}};
  if (!cmd.set.empty()) {
    const VertexSet b = set_of(h.labels, cmd.set);
    const LazyBurnResult result = lazy_propagate(h.hypergraph, b, mode);
    for (std::size_t t = 0; t < result.rounds.size(); ++t) {
      out << "round " << t + 2 << ':';
      for (const Firing& f : result.rounds[t].firings)
        out << ' ' << h.labels.label(f.vertex) << " (h" << f.hyperedge + 1 << ')';
      out << '\n';
    }
    const bool complete = result.closure == h.hypergraph.vertices();
    out << "closure: " << joined(h.labels, result.closure) << '\n';
    out << "lazy burning set: " << (complete ? "yes" : "no") << '\n';
    record["set"] = cmd.set;
    record["lazy_burning_set"] = complete;
  } else {
    const LazyBurningNumber bl = lazy_burning_number(h.hypergraph, mode);
    out << "b_L = " << bl.size << ", witness " << joined(h.labels, bl.witness) << '\n';
    record["b_L"] = bl.size;
    record["witness"] = Json::array();
    bl.witness.for_each([&](std::size_t v) { record["witness"].push_back(h.labels.label(v)); });
  }
  report.write(record);
  return 0;
}

int run_force(const Command& cmd, std::ostream& out, ReportWriter& report) {
  LabeledGraph g;
  if (cmd.graph) {
    g = load_graph(*cmd.graph);
  } else {
    const LabeledHypergraph h = load_hypergraph(*cmd.hypergraph);
    IncidenceGraph ig = incidence_graph(h.hypergraph, h.labels);
    g = {std::move(ig.graph), std::move(ig.labeling)};
  }
  Json record{{"command", "force"}};
  if (!cmd.set.empty()) {
    const VertexSet b = set_of(g.labels, cmd.set);
    const ForcingTrace trace = force_closure(g.graph, b);
    for (const Force& f : trace.forces)
      out << g.labels.label(f.forcer) << " -> " << g.labels.label(f.forced) << '\n';
    const bool complete = trace.final == g.graph.vertices();
    out << "blue: " << joined(g.labels, trace.final) << '\n';
    out << "zero forcing set: " << (complete ? "yes" : "no") << '\n';
    record["set"] = cmd.set;
    record["zero_forcing_set"] = complete;
  } else {
    const ZeroForcingNumber z = zero_forcing_number(g.graph);
    out << "Z = " << z.size << ", witness " << joined(g.labels, z.witness) << '\n';
    record["Z"] = z.size;
    record["witness"] = Json::array();
    z.witness.for_each([&](std::size_t v) { record["witness"].push_back(g.labels.label(v)); });
  }
  report.write(record);
  return 0;
}

int run_spectrum(const Command& cmd, std::ostream& out, ReportWriter& report) {
  const LabeledGraph g = load_graph(*cmd.graph);
  const IntPolynomial p = char_poly(g.graph);
  const SpectrumApprox s = spectrum_approx(g.graph, cmd.tol.value_or(kJacobiTolerance), cmd.max_sweeps);
  out << "p(x) = " << p.pretty() << '\n';
  out << "eigenvalues:";
  out << std::fixed << std::setprecision(6);
  for (double e : s.eigenvalues) out << ' ' << (std::abs(e) < 5e-7 ? 0.0 : e);
  out << '\n';
  report.write(Json{{"command", "spectrum"},
                    {"polynomial", p.to_strings()},
                    {"eigenvalues", s.eigenvalues}});
  return 0;
}

int run_product(const Command& cmd, std::ostream& out, ReportWriter& report) {
  const LabeledGraph g = load_graph(*cmd.graph);
  const LabeledGraph h = cmd.with ? load_graph(*cmd.with)
                                  : LabeledGraph{complete_graph(*cmd.n),
                                                 VertexLabeling::numbered("w", *cmd.n)};
  const ProductGraph product =
      cmd.kind == "cartesian" ? cartesian_product(g.graph, h.graph) : strong_product(g.graph, h.graph);
  const LabeledGraph labeled{product.graph, product_labeling(g.labels, h.labels)};
  out << serialize_graph(labeled);
  report.write(Json{{"command", "product"}, {"kind", cmd.kind}, {"graph", serialize_graph(labeled)}});
  return 0;
}

int run_cospectral(const Command& cmd, std::ostream& out, ReportWriter& report) {
  const LabeledGraph g = load_graph(cmd.pair[0]);
  const LabeledGraph h = load_graph(cmd.pair[1]);
  const IntPolynomial pg = char_poly(g.graph);
  const IntPolynomial ph = char_poly(h.graph);
  const bool cospectral = g.graph.order() == h.graph.order() && pg == ph;
  out << "p_G(x) = " << pg.pretty() << '\n';
  out << "p_H(x) = " << ph.pretty() << '\n';
  out << "cospectral = " << (cospectral ? "true" : "false") << '\n';
  Json record{{"command", "cospectral"},
              {"polynomial_G", pg.to_strings()},
              {"polynomial_H", ph.to_strings()},
              {"cospectral", cospectral}};
  if (g.graph.order() != h.graph.order() || degree_sequence(g.graph) != degree_sequence(h.graph)) {
    out << "isomorphic = false\n";
    record["isomorphic"] = false;
  } else if (g.graph.order() <= 10) {
    const bool iso = are_isomorphic_bruteforce(g.graph, h.graph);
    out << "isomorphic = " << (iso ? "true" : "false") << '\n';
    record["isomorphic"] = iso;
  } else {
    out << "isomorphic = unknown (order above 10)\n";
  }
  report.write(record);
  return 0;
}

int run_verify(const Command& cmd, std::ostream& out, ReportWriter& report) {
  if (cmd.all) {
    VerifyOptions options;
    options.seed = cmd.seed;
    options.max_order = cmd.max_order;
    options.sweeps = cmd.sweeps;
    options.threads = cmd.threads;
    const VerifySummary summary = verify_all(
        [&](const VerificationReport& r) {
          report.write(r);
          if (r.status == ClaimStatus::violated) out << r.claim_id << ": " << r.summary() << '\n';
        },
        options);
    out << summary.holds << " holds, " << summary.violated << " violated, " << summary.skipped
        << " skipped\n";
    return summary.ok() ? 0 : 1;
  }

  VerificationReport r;
  const std::string& claim = cmd.claim;
  if (!cmd.name.empty()) {
    r = verify_fixture(fixture(cmd.name));
  } else if (claim == "forcing_bound") {
    r = verify_forcing_bound(load_hypergraph(*cmd.hypergraph));
  } else if (claim == "improved_bound") {
    r = verify_improved_bound(load_hypergraph(*cmd.hypergraph));
  } else if (claim == "lazy_le_burning") {
    r = verify_lazy_le_burning(load_hypergraph(*cmd.hypergraph));
  } else if (claim == "lazy_forcing_equivalence") {
    r = verify_lazy_forcing_equivalence(load_hypergraph(*cmd.hypergraph));
  } else if (claim == "closure_confluence") {
    r = verify_closure_confluence(load_hypergraph(*cmd.hypergraph));
  } else if (claim == "equality_family") {
    r = verify_equality_family(cmd.sizes);
  } else if (claim == "burning_preservation") {
    r = verify_burning_preservation(load_graph(*cmd.graph), cmd.n.value_or(2));
  } else if (claim == "zero_forcing_additivity") {
    r = verify_zero_forcing_additivity(load_graph(*cmd.graph).graph);
  } else if (claim == "cospectral_pair") {
    r = generate_cospectral_pair(cmd.n.value_or(1)).report;
  } else if (claim == "strong_product_spectrum") {
    r = verify_strong_product_spectrum(load_graph(cmd.pair[0]).graph, load_graph(cmd.pair[1]).graph,
                                       cmd.tol.value_or(1e-6));
  }
  out << r.summary() << '\n';
  report.write(r);
  return r.status == ClaimStatus::violated ? 1 : 0;
}

int run_fixtures(const Command& cmd, std::ostream& out) {
  if (!cmd.name.empty()) {
    const Fixture f = fixture(cmd.name);
    out << (f.is_graph() ? serialize_graph(f.graph()) : serialize_hypergraph(f.hypergraph()));
    return 0;
  }
  for (const Fixture& f : fixtures()) {
    out << f.name << (f.is_graph() ? " graph" : " hypergraph");
    for (const auto& [key, value] : f.expected) out << ' ' << key << '=' << value;
    out << '\n';
  }
  return 0;
}

const std::vector<std::string> kHypergraphClaims{"forcing_bound", "improved_bound",
                                                 "lazy_le_burning", "lazy_forcing_equivalence",
                                                 "closure_confluence"};
const std::vector<std::string> kGraphClaims{"burning_preservation", "zero_forcing_additivity"};

bool contains(const std::vector<std::string>& list, const std::string& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

}  // namespace

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("PYROLACE_FIXTURE_DIR"); env && *env) return env;
  return PYROLACE_DEFAULT_FIXTURE_DIR;
}

std::filesystem::path resolve_input(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return path;
  if (path.is_relative()) {
    const std::filesystem::path candidate = fixture_dir() / path;
    if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
  }
  throw UsageError("missing file '" + path.string() + "'");
}

std::optional<Command> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Exact burning, lazy burning, zero forcing and spectral tools", "pyrolace"};
  app.require_subcommand(1);

  std::string graph, hypergraph, with, report, mode;
  std::vector<std::string> pair, sequence, set;
  Command cmd;
  bool no_timing = false;

  const std::vector<std::string> modes{"vacuous", "strict"};
  auto add_graph = [&](CLI::App* sub) { return sub->add_option("--graph", graph, "graph file"); };
  auto add_hypergraph = [&](CLI::App* sub) {
    return sub->add_option("--hypergraph", hypergraph, "hypergraph file");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "singleton rule")->check(CLI::IsMember(modes));
  };
  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", report, "JSON-lines output path");
    sub->add_option("--threads", cmd.threads, "worker threads")->check(CLI::Range(1U, 256U));
  };

  CLI::App* burn = app.add_subcommand("burn", "burning number or a burning trace");
  add_graph(burn);
  add_hypergraph(burn);
  add_mode(burn);
  add_report(burn);
  burn->add_option("--sequence", sequence, "sources to simulate");
  burn->add_flag("--redundant", cmd.redundant, "also search for a redundant last source");

  CLI::App* lazy = app.add_subcommand("lazy", "lazy burning number or closure");
  add_hypergraph(lazy);
  add_mode(lazy);
  add_report(lazy);
  lazy->add_option("--set", set, "initial burned set");

  CLI::App* force = app.add_subcommand("force", "zero forcing number or closure");
  add_graph(force);
  add_hypergraph(force)->description("hypergraph file, forced on its incidence graph");
  add_report(force);
  force->add_option("--set", set, "initial blue set");

  CLI::App* spectrum = app.add_subcommand("spectrum", "characteristic polynomial and eigenvalues");
  add_graph(spectrum);
  add_report(spectrum);
  spectrum->add_option("--tol", cmd.tol, "Jacobi tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--max-sweeps", cmd.max_sweeps, "Jacobi sweep limit")->check(CLI::NonNegativeNumber);

  CLI::App* product = app.add_subcommand("product", "strong or Cartesian product");
  add_graph(product);
  add_report(product);
  product->add_option("--with", with, "second factor file");
  product->add_option("--n", cmd.n, "use K_n as the second factor")->check(CLI::PositiveNumber);
  product->add_option("--kind", cmd.kind, "strong or cartesian")
      ->check(CLI::IsMember({"strong", "cartesian"}));

  CLI::App* cospectral = app.add_subcommand("cospectral", "compare characteristic polynomials");
  cospectral->add_option("--pair", pair, "two graph files")->expected(2);
  add_report(cospectral);

  CLI::App* verify = app.add_subcommand("verify", "check claims");
  verify->add_flag("--all", cmd.all, "fixtures, examples and random sweeps");
  verify->add_option("--claim", cmd.claim, "single claim id");
  verify->add_option("--name", cmd.name, "fixture name");
  add_graph(verify);
  add_hypergraph(verify);
  verify->add_option("--pair", pair, "two graph files")->expected(2);
  verify->add_option("--n", cmd.n, "K_n factor")->check(CLI::PositiveNumber);
  verify->add_option("--sizes", cmd.sizes, "hyperedge sizes for the equality family");
  verify->add_option("--seed", cmd.seed, "sweep seed");
  verify->add_option("--max-order", cmd.max_order, "largest random order")->check(CLI::Range(1, 10));
  verify->add_option("--sweeps", cmd.sweeps, "random hypergraphs");
  verify->add_option("--tol", cmd.tol, "spectrum tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "write elapsed_ms as 0");
  add_report(verify);

  CLI::App* list = app.add_subcommand("fixtures", "list built-in fixtures");
  list->add_option("--name", cmd.name, "print one fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::vector<std::pair<CLI::App*, Verb>> verbs{
      {burn, Verb::burn},       {lazy, Verb::lazy},         {force, Verb::force},
      {spectrum, Verb::spectrum}, {product, Verb::product}, {cospectral, Verb::cospectral},
      {verify, Verb::verify},   {list, Verb::fixtures}};
  for (auto [sub, verb] : verbs)
    if (sub->parsed()) cmd.verb = verb;

  cmd.mode = mode;
  cmd.timing = !no_timing;
  cmd.sequence = split_labels(sequence);
  cmd.set = split_labels(set);
  if (!graph.empty()) cmd.graph = resolve_input(graph);
  if (!hypergraph.empty()) cmd.hypergraph = resolve_input(hypergraph);
  if (!with.empty()) cmd.with = resolve_input(with);
  for (const auto& p : pair) cmd.pair.push_back(resolve_input(p));
  if (!report.empty()) cmd.report = report;

  auto need = [](bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
  };
  switch (cmd.verb) {
    case Verb::burn:
      need(cmd.graph.has_value() != cmd.hypergraph.has_value(),
           "burn needs exactly one of --graph or --hypergraph");
      need(!(cmd.graph && !cmd.mode.empty()), "--mode applies to hypergraphs only");
      need(!(cmd.hypergraph && cmd.redundant), "--redundant applies to graphs only");
      break;
    case Verb::lazy:
      need(cmd.hypergraph.has_value(), "lazy needs --hypergraph");
      break;
    case Verb::force:
      need(cmd.graph.has_value() != cmd.hypergraph.has_value(),
           "force needs exactly one of --graph or --hypergraph");
      break;
    case Verb::spectrum:
      need(cmd.graph.has_value(), "spectrum needs --graph");
      break;
    case Verb::product:
      need(cmd.graph.has_value(), "product needs --graph");
      need(cmd.with.has_value() != cmd.n.has_value(), "product needs exactly one of --with or --n");
      break;
    case Verb::cospectral:
      need(cmd.pair.size() == 2, "cospectral needs --pair <file> <file>");
      break;
    case Verb::verify: {
      const int selectors = int{cmd.all} + int{!cmd.claim.empty()} + int{!cmd.name.empty()};
      need(selectors == 1, "verify needs exactly one of --all, --claim or --name");
      if (!cmd.name.empty()) {
        try {
          fixture(cmd.name);
        } catch (const PreconditionError& e) {
          throw UsageError(e.what());
        }
      }
      if (cmd.claim.empty()) break;
      if (contains(kHypergraphClaims, cmd.claim)) {
        need(cmd.hypergraph.has_value(), cmd.claim + " needs --hypergraph");
      } else if (contains(kGraphClaims, cmd.claim)) {
        need(cmd.graph.has_value(), cmd.claim + " needs --graph");
      } else if (cmd.claim == "strong_product_spectrum") {
        need(cmd.pair.size() == 2, cmd.claim + " needs --pair <file> <file>");
      } else if (cmd.claim == "equality_family") {
        need(!cmd.sizes.empty(), cmd.claim + " needs --sizes");
      } else if (cmd.claim != "cospectral_pair") {
        throw UsageError("unknown claim '" + cmd.claim + "'");
      }
      break;
    }
    case Verb::fixtures:
      if (!cmd.name.empty()) {
        try {
          fixture(cmd.name);
        } catch (const PreconditionError& e) {
          throw UsageError(e.what());
        }
      }
      break;
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  (void)err;
  ReportWriter report(cmd.report, cmd.timing);
  switch (cmd.verb) {
    case Verb::burn:
      return run_burn(cmd, out, report);
    case Verb::lazy:
      return run_lazy(cmd, out, report);
    case Verb::force:
      return run_force(cmd, out, report);
    case Verb::spectrum:
      return run_spectrum(cmd, out, report);
    case Verb::product:
      return run_product(cmd, out, report);
    case Verb::cospectral:
      return run_cospectral(cmd, out, report);
    case Verb::verify:
      return run_verify(cmd, out, report);
    case Verb::fixtures:
      return run_fixtures(cmd, out);
  }
  return 2;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<Command> cmd = parse_args(argc, argv, out);
    if (!cmd) return 0;
    return run(*cmd, out, err);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace pyrolace::cli
