#pragma once

#include "densekit/graph.h"

namespace densekit {

// w(S1, S2) = sum over ordered pairs (u in S1, v in S2) of w(u, v).
double weight_between(const Graph& g, const VertexSet& s1, const VertexSet& s2);

// Total weight of arcs from `from` into `to`.
double arc_weight_between(const Digraph& d, const VertexSet& from, const VertexSet& to);

// Phi(S) = w(S, ~S) / min(vol(S), vol(~S)). Throws for empty or full S.
double conductance(const Graph& g, const VertexSet& s);

// Phi(S) = w(S, ~S) / vol(S). The variant used by the evolving-set analysis
// and the cover correspondences, where the set is known to be small.
double conductance_one_sided(const Graph& g, const VertexSet& s);

// beta(L, R) = 1 - 2 w(L, R) / vol(L u R). L, R disjoint, vol(L u R) > 0.
double bipartiteness(const Graph& g, const VertexSet& l, const VertexSet& r);

// F(L, R) = 1 - 2 w(L, R) / (vol_out(L) + vol_in(R)).
double flow_ratio(const Digraph& d, const VertexSet& l, const VertexSet& r);

// CI(L, R) = |w(L,R) - w(R,L)| / (2 (w(L,R) + w(R,L))).
double cut_imbalance(const Digraph& d, const VertexSet& l, const VertexSet& r);

// Hypergraph cut weight w(A, B | C): total weight of edges meeting both A and
// B while avoiding C.
double restricted_weight(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& c);

// beta_H(L, R) per the signless-diffusion measure of how far (L, R) is from a
// 2-colourable component: edges confined to one side or leaking past the pair
// are charged, edges straddling (L, R) are free.
double hyper_bipartiteness(const Hypergraph& h, const VertexSet& l, const VertexSet& r);

// Hypergraph conductance w(S, ~S) / vol(S) with w counting edges that cross.
double hyper_conductance_one_sided(const Hypergraph& h, const VertexSet& s);

}  // namespace densekit
