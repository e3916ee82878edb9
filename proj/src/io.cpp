#include "densekit/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace densekit {

VertexId LabelMap::intern(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  VertexId id = static_cast<VertexId>(labels_.size());
  labels_.push_back(label);
  index_.emplace(label, id);
  return id;
}

LabelMap LabelMap::identity(std::size_t n) {
  LabelMap m;
  for (std::size_t i = 0; i < n; ++i) m.intern(std::to_string(i));
  return m;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

double parse_weight(const std::string& tok, const std::string& path, std::size_t lineno) {
  std::size_t pos = 0;
  double w = 0;
  try {
    w = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(path, lineno, "bad weight '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(path, lineno, "bad weight '" + tok + "'");
  if (!(w > 0)) throw ParseError(path, lineno, "weight must be positive");
  return w;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

template <typename EdgeFn>
void parse_lines(std::istream& in, EdgeFn&& on_edge) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    on_edge(tokens_of(line), lineno);
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

LabeledGraph read_graph(std::istream& in, const std::string& path) {
  LabelMap labels;
  std::vector<WeightedEdge> edges;
  parse_lines(in, [&](const std::vector<std::string>& t, std::size_t lineno) {
    if (t.size() < 2 || t.size() > 3) throw ParseError(path, lineno, "expected 'u v [w]'");
    VertexId u = labels.intern(t[0]);
    VertexId v = labels.intern(t[1]);
    if (u == v) throw ParseError(path, lineno, "self-loop on '" + t[0] + "'");
    double w = t.size() == 3 ? parse_weight(t[2], path, lineno) : 1.0;
    edges.push_back({u, v, w});
  });
  return {Graph(labels.size(), edges), std::move(labels)};
}

LabeledGraph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in, path);
}

LabeledDigraph read_digraph(std::istream& in, const std::string& path) {
  LabelMap labels;
  std::vector<Arc> arcs;
  parse_lines(in, [&](const std::vector<std::string>& t, std::size_t lineno) {
    if (t.size() < 2 || t.size() > 3) throw ParseError(path, lineno, "expected 'tail head [w]'");
    VertexId u = labels.intern(t[0]);
    VertexId v = labels.intern(t[1]);
    if (u == v) throw ParseError(path, lineno, "self-loop on '" + t[0] + "'");
    double w = t.size() == 3 ? parse_weight(t[2], path, lineno) : 1.0;
    arcs.push_back({u, v, w});
  });
  return {Digraph(labels.size(), arcs), std::move(labels)};
}

LabeledDigraph read_digraph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_digraph(in, path);
}

LabeledHypergraph read_hypergraph(std::istream& in, const std::string& path) {
  LabelMap labels;
  std::vector<Hyperedge> edges;
  parse_lines(in, [&](const std::vector<std::string>& t, std::size_t lineno) {
    if (t.size() < 3) throw ParseError(path, lineno, "expected 'w v1 v2 ... vr' with rank >= 2");
    double w = parse_weight(t[0], path, lineno);
    std::vector<VertexId> members;
    members.reserve(t.size() - 1);
    for (std::size_t i = 1; i < t.size(); ++i) members.push_back(labels.intern(t[i]));
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(path, lineno, "duplicate vertex in hyperedge");
    edges.push_back({w, std::move(members)});
  });
  return {Hypergraph(labels.size(), std::move(edges)), std::move(labels)};
}

LabeledHypergraph read_hypergraph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_hypergraph(in, path);
}

void write_graph(std::ostream& out, const Graph& g, const LabelMap& labels) {
  for (const auto& e : g.edges())
    out << labels.label(e.u) << ' ' << labels.label(e.v) << ' ' << e.w << '\n';
}

void write_digraph(std::ostream& out, const Digraph& d, const LabelMap& labels) {
  for (const auto& a : d.arcs())
    out << labels.label(a.tail) << ' ' << labels.label(a.head) << ' ' << a.w << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, const LabelMap& labels) {
  for (const auto& e : h.edges()) {
    out << e.w;
    for (VertexId v : e.members) out << ' ' << labels.label(v);
    out << '\n';
  }
}

std::string partition_to_json(const Partition& parts, const LabelMap& labels) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& part : parts) {
    nlohmann::json cluster = nlohmann::json::array();
    for (VertexId v : part) cluster.push_back(labels.label(v));
    j.push_back(cluster);
  }
  return j.dump();
}

Partition partition_from_json_file(const std::string& path, LabelMap& labels) {
  auto in = open_or_throw(path);
  nlohmann::json j;
  in >> j;
  if (!j.is_array()) throw std::runtime_error(path + ": expected a JSON array of arrays");
  Partition parts;
  for (const auto& cluster : j) {
    if (!cluster.is_array()) throw std::runtime_error(path + ": expected a JSON array of arrays");
    VertexSet s;
    for (const auto& v : cluster) {
      std::string lab = v.is_string() ? v.get<std::string>() : v.dump();
      s.push_back(labels.intern(lab));
    }
    parts.push_back(make_vertex_set(std::move(s)));
  }
  return parts;
}

}  // namespace densekit
