#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pyrolace/burning.hpp"
#include "pyrolace/errors.hpp"
#include "pyrolace/harness.hpp"
#include "pyrolace/lazy_burning.hpp"
#include "pyrolace/spectral.hpp"
#include "pyrolace/text_format.hpp"
#include "pyrolace/zero_forcing.hpp"

namespace py = pybind11;
using namespace pyrolace;

namespace {

SingletonMode parse_mode(const std::string& mode) {
  if (mode == "vacuous") return SingletonMode::vacuous;
  if (mode == "strict") return SingletonMode::strict;
  throw PreconditionError("mode must be 'vacuous' or 'strict'");
}

VertexSet to_set(const std::vector<std::size_t>& vs) {
  VertexSet out;
  for (std::size_t v : vs) {
    if (v >= VertexSet::kCapacity) throw IndexError("vertex " + std::to_string(v) + " out of range");
    out.set(v);
  }
  return out;
}

py::list poly_to_list(const IntPolynomial& p) {
  py::list out;
  py::object as_int = py::module_::import("builtins").attr("int");
  for (const auto& c : p.to_strings()) out.append(as_int(c));
  return out;
}

py::list trace_rounds(const BurnTrace& trace) {
  py::list out;
  for (const BurnRound& r : trace.rounds) {
    py::object source = r.source ? py::object(py::int_(*r.source)) : py::none();
    out.append(py::make_tuple(source, r.spread.to_vector()));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact burning, lazy burning, zero forcing and spectral routines";

  static py::exception<Error> base(m, "PyrolaceError");
  py::register_exception<pyrolace::IndexError>(m, "VertexIndexError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<SolverError>(m, "SolverError", base.ptr());
  py::register_exception<pyrolace::ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t order, const std::vector<Edge>& edges) {
             return Graph(order, edges);
           }),
           py::arg("order"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, std::size_t v) { return g.neighbors(v).to_vector(); })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::size_t, const std::vector<std::vector<std::size_t>>&>(), py::arg("order"),
           py::arg("hyperedges") = std::vector<std::vector<std::size_t>>{})
      .def_property_readonly("order", &Hypergraph::order)
      .def_property_readonly("hyperedges", [](const Hypergraph& h) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& e : h.hyperedges()) out.push_back(e.to_vector());
        return out;
      })
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; });

  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("distance", [](const Graph& g, std::size_t u, std::size_t v) { return distance(g, u, v); },
        "None when unreachable");
  m.def("connected_components", [](const Graph& g) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : connected_components(g)) out.push_back(c.to_vector());
    return out;
  });
  m.def("degree_sequence", &degree_sequence);
  m.def("are_isomorphic", &are_isomorphic_bruteforce, py::arg("g"), py::arg("h"),
        py::arg("max_order") = 10);

  m.def("incidence_graph", [](const Hypergraph& h) {
    const IncidenceGraph ig = incidence_graph(h);
    return py::make_tuple(ig.graph, ig.split);
  }, "(graph, split); hyperedge j is node split + j");
  m.def("count_nonsingleton_components", &count_nonsingleton_components);

  m.def("simulate_graph_burning", [](const Graph& g, const std::vector<std::size_t>& seq) {
    return trace_rounds(simulate_graph_burning(g, seq));
  });
  m.def("is_burning_sequence", [](const Graph& g, const std::vector<std::size_t>& seq) {
    return is_burning_sequence(g, seq);
  });
  m.def("burning_number", [](const Graph& g) {
    const BurningResult r = burning_number(g);
    return py::make_tuple(r.rounds, r.witness);
  });
  m.def("redundant_last_source", [](const Graph& g) {
    const RedundantLastSource r = has_optimal_sequence_with_redundant_last_source(g);
    return py::make_tuple(r.found, r.witness);
  });
  m.def("hypergraph_burning_number", [](const Hypergraph& h, const std::string& mode) {
    const BurningResult r = hypergraph_burning_number(h, parse_mode(mode));
    return py::make_tuple(r.rounds, r.witness);
  }, py::arg("h"), py::arg("mode") = "strict");

  m.def("lazy_closure", [](const Hypergraph& h, const std::vector<std::size_t>& b, const std::string& mode) {
    return lazy_propagate(h, to_set(b), parse_mode(mode)).closure.to_vector();
  }, py::arg("h"), py::arg("initial"), py::arg("mode") = "vacuous");
  m.def("lazy_burning_number", [](const Hypergraph& h, const std::string& mode) {
    const LazyBurningNumber r = lazy_burning_number(h, parse_mode(mode));
    return py::make_tuple(r.size, r.witness.to_vector());
  }, py::arg("h"), py::arg("mode") = "vacuous");

  m.def("force_closure", [](const Graph& g, const std::vector<std::size_t>& b) {
    const ForcingTrace t = force_closure(g, to_set(b));
    std::vector<std::pair<std::size_t, std::size_t>> forces;
    for (const Force& f : t.forces) forces.emplace_back(f.forcer, f.forced);
    return py::make_tuple(forces, t.final.to_vector());
  }, "(forces, final blue set)");
  m.def("zero_forcing_number", [](const Graph& g) {
    const ZeroForcingNumber r = zero_forcing_number(g);
    return py::make_tuple(r.size, r.witness.to_vector());
  });

  m.def("char_poly", [](const Graph& g) { return poly_to_list(char_poly(g)); },
        "ascending integer coefficients");
  m.def("are_cospectral", &are_cospectral);
  m.def("spectrum", [](const Graph& g, double tol) { return spectrum_approx(g, tol).eigenvalues; },
        py::arg("g"), py::arg("tol") = kJacobiTolerance);
  m.def("strong_product", [](const Graph& g, const Graph& h) { return strong_product(g, h).graph; });
  m.def("cartesian_product", [](const Graph& g, const Graph& h) { return cartesian_product(g, h).graph; });

  m.def("parse_graph", [](const std::string& text) {
    LabeledGraph g = parse_graph(text);
    return py::make_tuple(g.graph, g.labels.labels());
  });
  m.def("parse_hypergraph", [](const std::string& text) {
    LabeledHypergraph h = parse_hypergraph(text);
    return py::make_tuple(h.hypergraph, h.labels.labels());
  });
  m.def("serialize_graph", [](const Graph& g) { return serialize_graph(with_default_labels(g)); });
  m.def("serialize_hypergraph", [](const Hypergraph& h) {
    return serialize_hypergraph(with_default_labels(h));
  });

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("verify_all", [](std::uint64_t seed, std::size_t sweeps, std::size_t max_order) {
    VerifyOptions options;
    options.seed = seed;
    options.sweeps = sweeps;
    options.max_order = max_order;
    VerifySummary s;
    {
      py::gil_scoped_release release;
      s = verify_all(nullptr, options);
    }
    py::dict out;
    out["holds"] = s.holds;
    out["violated"] = s.violated;
    out["skipped"] = s.skipped;
    return out;
  }, py::arg("seed") = 0, py::arg("sweeps") = 200, py::arg("max_order") = 8);
}
