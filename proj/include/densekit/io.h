#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "densekit/graph.h"

namespace densekit {

// Maps arbitrary string vertex labels to dense 0-based ids in first-seen order.
class LabelMap {
 public:
  VertexId intern(const std::string& label);
  const std::string& label(VertexId id) const { return labels_[id]; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Numeric labels "0".."n-1" for programmatically built instances.
  static LabelMap identity(std::size_t n);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what) {}
};

struct LabeledGraph {
  Graph graph;
  LabelMap labels;
};

struct LabeledDigraph {
  Digraph graph;
  LabelMap labels;
};

struct LabeledHypergraph {
  Hypergraph graph;
  LabelMap labels;
};

// One edge per line: `u v [w]`, weight defaults to 1. Lines starting with '#'
// are ignored. Self-loops and non-positive weights are parse errors.
LabeledGraph read_graph(std::istream& in, const std::string& path = "<stream>");
LabeledGraph read_graph_file(const std::string& path);

// One arc per line: `tail head [w]`.
LabeledDigraph read_digraph(std::istream& in, const std::string& path = "<stream>");
LabeledDigraph read_digraph_file(const std::string& path);

// One edge per line: `w v1 v2 ... vr` (weight first, then at least two members).
LabeledHypergraph read_hypergraph(std::istream& in, const std::string& path = "<stream>");
LabeledHypergraph read_hypergraph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g, const LabelMap& labels);
void write_digraph(std::ostream& out, const Digraph& d, const LabelMap& labels);
void write_hypergraph(std::ostream& out, const Hypergraph& h, const LabelMap& labels);

// Partitions are stored as a JSON array of arrays of vertex labels.
using Partition = std::vector<VertexSet>;
std::string partition_to_json(const Partition& parts, const LabelMap& labels);
Partition partition_from_json_file(const std::string& path, LabelMap& labels);

}  // namespace densekit
