#include "densekit/cover.h"

#include <algorithm>
#include <stdexcept>

namespace densekit {

Graph double_cover(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<WeightedEdge> edges;
  edges.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, static_cast<VertexId>(e.v + n), e.w});
    edges.push_back({e.v, static_cast<VertexId>(e.u + n), e.w});
  }
  return Graph(2 * n, edges);
}

Graph semi_double_cover(const Digraph& d) {
  std::size_t n = d.vertex_count();
  std::vector<WeightedEdge> edges;
  edges.reserve(d.arc_count());
  for (const auto& a : d.arcs()) edges.push_back({a.tail, static_cast<VertexId>(a.head + n), a.w});
  return Graph(2 * n, edges);
}

VertexSet lift_pair(const VertexSet& l, const VertexSet& r, std::size_t n) {
  VertexSet s;
  s.reserve(l.size() + r.size());
  for (VertexId v : l) s.push_back(v);
  for (VertexId v : r) s.push_back(static_cast<VertexId>(v + n));
  std::sort(s.begin(), s.end());
  return s;
}

bool is_simple_set(const VertexSet& cover_set, std::size_t n) {
  std::vector<char> seen(n, 0);
  for (VertexId x : cover_set) {
    VertexId v = x < n ? x : static_cast<VertexId>(x - n);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void split_simple_set(const VertexSet& cover_set, std::size_t n, VertexSet& l, VertexSet& r) {
  l.clear();
  r.clear();
  for (VertexId x : cover_set) {
    if (x < n)
      l.push_back(x);
    else
      r.push_back(static_cast<VertexId>(x - n));
  }
  if (!sets_disjoint(l, r)) throw std::domain_error("cover set is not simple");
}

VertexSet lazy_simplify(const VertexSet& cover_set, std::size_t n) {
  std::vector<char> c1(n, 0), c2(n, 0);
  for (VertexId x : cover_set) {
    if (x < n)
      c1[x] = 1;
    else
      c2[x - n] = 1;
  }
  VertexSet out;
  for (VertexId x : cover_set) {
    VertexId v = x < n ? x : static_cast<VertexId>(x - n);
    if (!(c1[v] && c2[v])) out.push_back(x);
  }
  return out;
}

}  // namespace densekit
