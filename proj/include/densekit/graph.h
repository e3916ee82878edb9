#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace densekit {

using VertexId = std::uint32_t;
using VertexSet = std::vector<VertexId>;  // sorted, unique

struct WeightedEdge {
  VertexId u, v;
  double w;
};

struct Arc {
  VertexId tail, head;
  double w;
};

// Immutable weighted undirected graph. Duplicate edges are merged by summing
// weights; self-loops are rejected. All weights must be strictly positive.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, const std::vector<WeightedEdge>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  double degree(VertexId v) const { return degree_[v]; }
  const std::vector<double>& degrees() const { return degree_; }
  double total_volume() const { return total_volume_; }  // vol(V) = 2 * sum of weights

  const std::vector<std::pair<VertexId, double>>& neighbors(VertexId v) const { return adj_[v]; }

  // w(u, v); 0 for absent pairs.
  double weight(VertexId u, VertexId v) const;

  double volume(const VertexSet& s) const;

  bool connected() const;

 private:
  std::vector<std::vector<std::pair<VertexId, double>>> adj_;
  std::vector<double> degree_;
  std::vector<WeightedEdge> edges_;
  double total_volume_ = 0;
};

// Immutable weighted directed graph. Duplicate arcs merge; self-loops rejected.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  double out_degree(VertexId v) const { return out_degree_[v]; }
  double in_degree(VertexId v) const { return in_degree_[v]; }
  const std::vector<std::pair<VertexId, double>>& out_neighbors(VertexId v) const { return out_[v]; }
  const std::vector<std::pair<VertexId, double>>& in_neighbors(VertexId v) const { return in_[v]; }

  double volume_out(const VertexSet& s) const;
  double volume_in(const VertexSet& s) const;

 private:
  std::vector<std::vector<std::pair<VertexId, double>>> out_, in_;
  std::vector<double> out_degree_, in_degree_;
  std::vector<Arc> arcs_;
};

struct Hyperedge {
  double w;
  std::vector<VertexId> members;  // sorted, distinct, size >= 2
};

// Immutable weighted hypergraph; deg(v) = sum of weights of edges containing v.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges);

  std::size_t vertex_count() const { return degree_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }

  double degree(VertexId v) const { return degree_[v]; }
  const std::vector<double>& degrees() const { return degree_; }
  double total_volume() const { return total_volume_; }  // sum_e w(e) * rank(e)

  const std::vector<std::uint32_t>& incident_edges(VertexId v) const { return incidence_[v]; }

  double volume(const VertexSet& s) const;

 private:
  std::vector<Hyperedge> edges_;
  std::vector<double> degree_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  double total_volume_ = 0;
};

// Helpers for the sorted-unique VertexSet representation.
VertexSet make_vertex_set(std::vector<VertexId> v);
bool set_contains(const VertexSet& s, VertexId v);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

// Two disjoint vertex sets with optional cached quality metrics.
struct BipartitePair {
  VertexSet left, right;
  double beta = -1;           // bipartiteness or beta_H, depending on context
  double flow_ratio = -1;     // digraph contexts
  double cut_imbalance = -1;  // digraph contexts
  bool found = true;

  bool empty() const { return left.empty() && right.empty(); }
};

}  // namespace densekit
