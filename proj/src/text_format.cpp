#include "pyrolace/text_format.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "pyrolace/errors.hpp"

namespace pyrolace {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_header(const std::vector<Line>& lines, std::string_view keyword) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + " <n>' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != keyword)
    throw ParseError(head.number, "expected '" + std::string(keyword) + " <n>'");
  const std::string& count = head.tokens[1];
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || ptr != count.data() + count.size())
    throw ParseError(head.number, "invalid vertex count '" + count + "'");
  if (n > VertexSet::kCapacity)
    throw CapacityError("vertex count " + count + " exceeds capacity " +
                        std::to_string(VertexSet::kCapacity));
  return n;
}

void declare(VertexLabeling& labels, std::size_t n, const Line& line) {
  if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'v <label>'");
  if (labels.find(line.tokens[1]))
    throw ParseError(line.number, "label '" + line.tokens[1] + "' declared twice");
  if (labels.size() == n)
    throw ParseError(line.number, "more than " + std::to_string(n) + " vertices");
  labels.add(line.tokens[1]);
}

void fill_default_labels(VertexLabeling& labels, std::size_t n) {
  for (std::size_t i = labels.size(); i < n; ++i) {
    std::string name = "v" + std::to_string(i + 1);
    if (labels.find(name))
      throw ParseError(0, "default label '" + name + "' collides with an explicit label");
    labels.add(std::move(name));
  }
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const std::size_t n = parse_header(lines, "graph");
  VertexLabeling labels;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto resolve = [&](const std::string& label, std::size_t number) {
    if (auto i = labels.find(label)) return *i;
    if (labels.size() == n)
      throw ParseError(number, "label '" + label + "' exceeds " + std::to_string(n) + " vertices");
    return labels.add(label);
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& directive = line.tokens[0];
    if (directive == "v") {
      declare(labels, n, line);
    } else if (directive == "e") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'e <u> <v>'");
      const std::size_t u = resolve(line.tokens[1], line.number);
      const std::size_t v = resolve(line.tokens[2], line.number);
      if (u == v) throw ParseError(line.number, "self-loop at '" + line.tokens[1] + "'");
      const Edge key{std::min(u, v), std::max(u, v)};
      if (!seen.insert(key).second) throw ParseError(line.number, "duplicate edge");
      edges.push_back(key);
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  fill_default_labels(labels, n);
  return {Graph(n, edges), std::move(labels)};
}

std::string serialize_graph(const LabeledGraph& g) {
  std::string out = "graph " + std::to_string(g.graph.order()) + "\n";
  for (const auto& label : g.labels.labels()) out += "v " + label + "\n";
  for (auto [u, v] : g.graph.edges())
    out += "e " + g.labels.label(u) + " " + g.labels.label(v) + "\n";
  return out;
}

LabeledHypergraph parse_hypergraph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const std::size_t n = parse_header(lines, "hypergraph");
  bool explicit_labels = false;
  for (std::size_t i = 1; i < lines.size(); ++i) explicit_labels |= lines[i].tokens[0] == "v";

  VertexLabeling labels = explicit_labels ? VertexLabeling{} : VertexLabeling::numbered("v", n);
  std::vector<VertexSet> hyperedges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& directive = line.tokens[0];
    if (directive == "v") {
      declare(labels, n, line);
    } else if (directive == "h") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "hyperedge needs a vertex");
      VertexSet e;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        auto v = labels.find(line.tokens[t]);
        if (!v) throw ParseError(line.number, "undeclared vertex '" + line.tokens[t] + "'");
        if (e.test(*v))
          throw ParseError(line.number, "vertex '" + line.tokens[t] + "' repeated in hyperedge");
        e.set(*v);
      }
      hyperedges.push_back(e);
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  fill_default_labels(labels, n);
  return {Hypergraph(n, std::move(hyperedges)), std::move(labels)};
}

std::string serialize_hypergraph(const LabeledHypergraph& h) {
  std::string out = "hypergraph " + std::to_string(h.hypergraph.order()) + "\n";
  for (const auto& label : h.labels.labels()) out += "v " + label + "\n";
  for (const VertexSet& e : h.hypergraph.hyperedges())
    out += "h " + h.labels.join(e.to_vector()) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LabeledGraph with_default_labels(const Graph& g) {
  return {g, VertexLabeling::numbered("v", g.order())};
}

LabeledHypergraph with_default_labels(const Hypergraph& h) {
  return {h, VertexLabeling::numbered("v", h.order())};
}

}  // namespace pyrolace
