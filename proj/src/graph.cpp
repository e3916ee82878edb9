#include "densekit/graph.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace densekit {

namespace {

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(std::size_t vertex_count, const std::vector<WeightedEdge>& edges)
    : adj_(vertex_count), degree_(vertex_count, 0.0) {
  std::map<std::pair<VertexId, VertexId>, double> merged;
  for (const auto& e : edges) {
    check_vertex(vertex_count, e.u);
    check_vertex(vertex_count, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (!(e.w > 0)) throw std::invalid_argument("non-positive edge weight");
    auto key = std::minmax(e.u, e.v);
    merged[{key.first, key.second}] += e.w;
  }
  edges_.reserve(merged.size());
  for (const auto& [key, w] : merged) {
    edges_.push_back({key.first, key.second, w});
    adj_[key.first].emplace_back(key.second, w);
    adj_[key.second].emplace_back(key.first, w);
    degree_[key.first] += w;
    degree_[key.second] += w;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  total_volume_ = std::accumulate(degree_.begin(), degree_.end(), 0.0);
}

double Graph::weight(VertexId u, VertexId v) const {
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<VertexId, double>{v, 0.0},
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != nb.end() && it->first == v) return it->second;
  return 0.0;
}

double Graph::volume(const VertexSet& s) const {
  double vol = 0;
  for (VertexId v : s) vol += degree_[v];
  return vol;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertex_count();
}

Digraph::Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs)
    : out_(vertex_count), in_(vertex_count), out_degree_(vertex_count, 0.0), in_degree_(vertex_count, 0.0) {
  std::map<std::pair<VertexId, VertexId>, double> merged;
  for (const auto& a : arcs) {
    check_vertex(vertex_count, a.tail);
    check_vertex(vertex_count, a.head);
    if (a.tail == a.head) throw std::invalid_argument("self-loop on vertex " + std::to_string(a.tail));
    if (!(a.w > 0)) throw std::invalid_argument("non-positive arc weight");
    merged[{a.tail, a.head}] += a.w;
  }
  arcs_.reserve(merged.size());
  for (const auto& [key, w] : merged) {
    arcs_.push_back({key.first, key.second, w});
    out_[key.first].emplace_back(key.second, w);
    in_[key.second].emplace_back(key.first, w);
    out_degree_[key.first] += w;
    in_degree_[key.second] += w;
  }
  for (auto& nb : out_) std::sort(nb.begin(), nb.end());
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

double Digraph::volume_out(const VertexSet& s) const {
  double vol = 0;
  for (VertexId v : s) vol += out_degree_[v];
  return vol;
}

double Digraph::volume_in(const VertexSet& s) const {
  double vol = 0;
  for (VertexId v : s) vol += in_degree_[v];
  return vol;
}

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges)
    : degree_(vertex_count, 0.0), incidence_(vertex_count) {
  std::map<std::vector<VertexId>, double> merged;
  for (auto& e : edges) {
    if (!(e.w > 0)) throw std::invalid_argument("non-positive hyperedge weight");
    std::sort(e.members.begin(), e.members.end());
    if (std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end())
      throw std::invalid_argument("hyperedge contains duplicate vertices");
    if (e.members.size() < 2) throw std::invalid_argument("hyperedge rank must be at least 2");
    for (VertexId v : e.members) check_vertex(vertex_count, v);
    merged[std::move(e.members)] += e.w;
  }
  edges_.reserve(merged.size());
  for (auto& [members, w] : merged) {
    std::uint32_t idx = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back({w, members});
    for (VertexId v : members) {
      degree_[v] += w;
      incidence_[v].push_back(idx);
    }
    total_volume_ += w * static_cast<double>(members.size());
  }
}

double Hypergraph::volume(const VertexSet& s) const {
  double vol = 0;
  for (VertexId v : s) vol += degree_[v];
  return vol;
}

VertexSet make_vertex_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace densekit
