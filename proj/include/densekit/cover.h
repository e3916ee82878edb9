#pragma once

#include "densekit/graph.h"

namespace densekit {

// Vertex v of the base graph maps to v (copy 1) and v + n (copy 2).
inline VertexId cover_id(VertexId v, int side, std::size_t n) {
  return side == 1 ? v : static_cast<VertexId>(v + n);
}

// Bipartite 2-lift: each edge {u, v} becomes {u1, v2} and {u2, v1}.
Graph double_cover(const Graph& g);

// One crossed edge per arc: (u, v) becomes {u1, v2}. Arc directions survive
// as the asymmetry between the two copies.
Graph semi_double_cover(const Digraph& d);

// S_H = L1 u R2 for disjoint base sets L, R.
VertexSet lift_pair(const VertexSet& l, const VertexSet& r, std::size_t n);

// Inverse of lift_pair for a simple cover set (at most one copy per vertex).
// Throws if the set is not simple.
void split_simple_set(const VertexSet& cover_set, std::size_t n, VertexSet& l, VertexSet& r);

bool is_simple_set(const VertexSet& cover_set, std::size_t n);

// Removes both copies of every doubly-present vertex; the remainder is simple.
VertexSet lazy_simplify(const VertexSet& cover_set, std::size_t n);

}  // namespace densekit
